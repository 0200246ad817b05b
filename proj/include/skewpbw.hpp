#pragma once

#include "skewpbw/classify.hpp"
#include "skewpbw/cli.hpp"
#include "skewpbw/deform.hpp"
#include "skewpbw/error.hpp"
#include "skewpbw/fixtures.hpp"
#include "skewpbw/freealg.hpp"
#include "skewpbw/koszul.hpp"
#include "skewpbw/linalg.hpp"
#include "skewpbw/presentation.hpp"
#include "skewpbw/rational.hpp"
#include "skewpbw/report.hpp"
#include "skewpbw/rewrite.hpp"
