#pragma once

// Embedded corpus of presentations in the ".alg" format.
//
// The ten Sridharan types use generators x, y, z and read each bracket cell v
// of the classification as the full right-hand side: a*b - b*a = v.

#include "skewpbw/error.hpp"
#include "skewpbw/presentation.hpp"

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skewpbw {

struct FixtureSource {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::array kFixtures{
    FixtureSource{"sridharan1", R"(algebra sridharan1
generators x, y, z
relation x*y - y*x = 0
relation y*z - z*y = 0
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan2", R"(algebra sridharan2
generators x, y, z
relation x*y - y*x = 0
relation y*z - z*y = x
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan3", R"(algebra sridharan3
generators x, y, z
relation x*y - y*x = x
relation y*z - z*y = 0
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan4", R"(algebra sridharan4
param alpha nonzero = 2
generators x, y, z
relation x*y - y*x = 0
relation y*z - z*y = alpha*y
relation z*x - x*z = -x
)"},
    FixtureSource{"sridharan5", R"(algebra sridharan5
generators x, y, z
relation x*y - y*x = 0
relation y*z - z*y = y
relation z*x - x*z = -x - y
)"},
    FixtureSource{"sridharan6", R"(algebra sridharan6
generators x, y, z
relation x*y - y*x = z
relation y*z - z*y = -2*y
relation z*x - x*z = -2*x
)"},
    FixtureSource{"sridharan7", R"(algebra sridharan7
generators x, y, z
relation x*y - y*x = 1
relation y*z - z*y = 0
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan8", R"(algebra sridharan8
generators x, y, z
relation x*y - y*x = 1
relation y*z - z*y = x
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan9", R"(algebra sridharan9
generators x, y, z
relation x*y - y*x = x
relation y*z - z*y = 1
relation z*x - x*z = 0
)"},
    FixtureSource{"sridharan10", R"(algebra sridharan10
generators x, y, z
relation x*y - y*x = 1
relation y*z - z*y = y
relation z*x - x*z = x
)"},
    FixtureSource{"weyl", R"(algebra weyl
generators x, y
relation x*y - y*x = 1
)"},
    FixtureSource{"poly1", R"(algebra poly1
generators x
)"},
    FixtureSource{"poly2", R"(algebra poly2
generators x, y
relation x*y = y*x
)"},
    FixtureSource{"poly3", R"(algebra poly3
generators x, y, z
relation x*y = y*x
relation y*z = z*y
relation z*x = x*z
)"},
    FixtureSource{"qplane", R"(algebra qplane
param q nonzero = 2
generators x, y
relation y*x = q*x*y
)"},
    FixtureSource{"qaffine3", R"(algebra qaffine3
param q12 nonzero = 2
param q13 nonzero = 3
param q23 nonzero = 5
generators x1, x2, x3
relation x2*x1 = q12*x1*x2
relation x3*x1 = q13*x1*x3
relation x3*x2 = q23*x2*x3
)"},
    FixtureSource{"sklyanin", R"(algebra sklyanin
# c = 0 specialization of a*yx + b*xy + c*zz and its cyclic companions
param a nonzero = 1
param b nonzero = 2
generators x, y, z
relation a*y*x + b*x*y = 0
relation a*x*z + b*z*x = 0
relation a*z*y + b*y*z = 0
)"},
    FixtureSource{"free2", R"(algebra free2
generators x, y
)"},
    FixtureSource{"nonjacobi", R"(algebra nonjacobi
# bracket [x,y]=x, [y,z]=y, [z,x]=z violates the Jacobi identity
generators x, y, z
relation x*y - y*x = x
relation y*z - z*y = y
relation z*x - x*z = z
)"},
    FixtureSource{"x2defect", R"(algebra x2defect
generators x, y
relation y*x = x*y + x*x
)"},
};

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : kFixtures) out.emplace_back(f.name);
  return out;
}

inline std::string_view fixture_source(std::string_view name) {
  for (const auto& f : kFixtures)
    if (f.name == name) return f.text;
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

inline Presentation fixture(std::string_view name, const ParamBinding& params = {}) {
  return parse_presentation(fixture_source(name), params);
}

/// Named groups of fixtures used by the table command.
inline std::vector<std::string> corpus(std::string_view selector) {
  if (selector == "sridharan") {
    std::vector<std::string> out;
    for (int i = 1; i <= 10; ++i) out.push_back("sridharan" + std::to_string(i));
    return out;
  }
  if (selector == "core") return {"poly3", "sklyanin", "qaffine3"};
  if (selector == "all") return fixture_names();
  throw Error(Errc::UnknownFixture, "no corpus named '" + std::string(selector) + "'");
}

}  // namespace skewpbw
