#pragma once

#include "berezin/composition.hpp"
#include "berezin/errors.hpp"
#include "berezin/grid.hpp"
#include "berezin/io.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/range_analysis.hpp"
#include "berezin/space.hpp"
#include "berezin/symbols.hpp"
#include "berezin/toeplitz.hpp"
#include "berezin/verify.hpp"
#include "berezin/version.hpp"
