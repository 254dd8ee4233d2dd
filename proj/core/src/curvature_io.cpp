#include "cosk/curvature_io.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cosk {

CurvatureTensor load_curvature_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw std::invalid_argument("curvature json: expected object with \"n\" and \"entries\"");
  const int n = j.at("n").get<int>();
  if (n < 1 || n > 16) throw std::invalid_argument("curvature json: n out of range");
  CurvatureTensor r(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n * n * n, false);
  auto off = [n](int i, int jj, int k, int l) {
    return ((static_cast<std::size_t>(i) * n + jj) * n + k) * n + l;
  };

  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() != 5)
      throw std::invalid_argument("curvature json: entry must be [i,j,k,l,value]");
    const int i = e[0].get<int>() - 1, jj = e[1].get<int>() - 1;
    const int k = e[2].get<int>() - 1, l = e[3].get<int>() - 1;
    const double v = e[4].get<double>();
    for (int idx : {i, jj, k, l})
      if (idx < 0 || idx >= n) throw std::invalid_argument("curvature json: index out of range");

    const int orbit[8][4] = {{i, jj, k, l}, {jj, i, k, l}, {i, jj, l, k}, {jj, i, l, k},
                             {k, l, i, jj}, {l, k, i, jj}, {k, l, jj, i}, {l, k, jj, i}};
    const double signs[8] = {1, -1, -1, 1, 1, -1, -1, 1};
    for (int t = 0; t < 8; ++t) {
      const auto& o = orbit[t];
      const double val = signs[t] * v;
      const std::size_t pos = off(o[0], o[1], o[2], o[3]);
      if (seen[pos]) {
        if (std::abs(r(o[0], o[1], o[2], o[3]) - val) > 1e-12 * std::max(1.0, std::abs(val)))
          throw std::invalid_argument("curvature json: conflicting entries");
      } else {
        seen[pos] = true;
        r.at(o[0], o[1], o[2], o[3]) = val;
      }
    }
  }

  require_valid(r);
  return r;
}

nlohmann::json curvature_to_json(const CurvatureTensor& r) {
  const int n = r.dim();
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::pair{k, l} < std::pair{i, j}) continue;
          const double v = r(i, j, k, l);
          if (v == 0.0) continue;
          entries.push_back({i + 1, j + 1, k + 1, l + 1, v});
        }
  return nlohmann::json{{"n", n}, {"entries", std::move(entries)}};
}

}  // namespace cosk
