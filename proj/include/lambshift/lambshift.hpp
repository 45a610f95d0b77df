// lambshift.hpp — umbrella header

#pragma once

#include "lambshift/analytic.hpp"
#include "lambshift/config.hpp"
#include "lambshift/errors.hpp"
#include "lambshift/figures.hpp"
#include "lambshift/hilbert.hpp"
#include "lambshift/io.hpp"
#include "lambshift/normalmodes.hpp"
#include "lambshift/params.hpp"
#include "lambshift/routes.hpp"
#include "lambshift/shift_set.hpp"
#include "lambshift/spectrum.hpp"
#include "lambshift/sweep.hpp"
#include "lambshift/validity.hpp"
