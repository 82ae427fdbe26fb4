#pragma once

#include "cdr/graph.hpp"

namespace fixtures {

inline cdr::Graph p4() { return cdr::Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline cdr::Graph p7() { return cdr::Graph::build(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}); }
inline cdr::Graph k3() { return cdr::Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}); }
inline cdr::Graph k4() { return cdr::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline cdr::Graph c5() { return cdr::Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}); }
/// K_{1,3} with centre 0.
inline cdr::Graph star4() { return cdr::Graph::build(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline cdr::Graph two_components() { return cdr::Graph::build(4, {{0, 1}, {2, 3}}); }

}  // namespace fixtures
