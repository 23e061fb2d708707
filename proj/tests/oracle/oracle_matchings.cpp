#include "oracle/oracle_matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

std::vector<std::vector<int>> all_perfect_matchings(const dimod::DimerModel& m) {
  int E = int(m.edges.size());
  int n = int(m.nodes.size());
  if (E > 20) throw std::runtime_error("oracle limited to 20 edges");
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1ul << E); ++mask) {
    std::vector<int> cover(size_t(n), 0);
    std::vector<int> sel;
    for (int e = 0; e < E; ++e) {
      if (!(mask >> e & 1)) continue;
      sel.push_back(e);
      cover[size_t(m.edges[size_t(e)].black)] += 1;
      cover[size_t(m.edges[size_t(e)].white)] += 1;
    }
    if (std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }))
      out.push_back(sel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
