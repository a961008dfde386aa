#include "copath/coalgebra.hpp"

#include <algorithm>
#include <tuple>

#include "copath/paths_analysis.hpp"

namespace copath {

CoradicalLayer coradical_layer(const MonomialShape& shape, std::size_t n, std::size_t len_cap) {
  if (n > len_cap) fail(Errc::BadArgument, "coradical layer degree exceeds the length cap");
  std::map<std::tuple<VertexId, VertexId, std::size_t>, std::vector<Path>> groups;
  for (const VertexId& v : shape.quiver().vertices()) {
    auto res = enumerate_from(shape, v, n, SIZE_MAX);
    for (const Path& p : res.paths) groups[{p.source(), p.target(), p.length()}].push_back(p);
  }
  CoradicalLayer layer;
  for (auto& [key, paths] : groups) {
    std::sort(paths.begin(), paths.end());
    layer.total += paths.size();
    layer.groups.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), paths});
  }
  return layer;
}

}  // namespace copath
