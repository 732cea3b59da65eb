#pragma once

#include "copol/case_engine.hpp"
#include "copol/certificates.hpp"
#include "copol/checked_int.hpp"
#include "copol/cyclotomic.hpp"
#include "copol/fixed_spaces.hpp"
#include "copol/irreps.hpp"
#include "copol/laurent.hpp"
#include "copol/reporting.hpp"
#include "copol/root_data.hpp"
