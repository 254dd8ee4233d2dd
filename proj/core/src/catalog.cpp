#include "cosk/catalog.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace cosk {
namespace {

std::string format_double(double v) {
  // shortest representation that round-trips, for canonical spec strings
  std::ostringstream os;
  os.precision(17);
  os << v;
  std::string s = os.str();
  for (int prec = 1; prec < 17; ++prec) {
    std::ostringstream t;
    t.precision(prec);
    t << v;
    if (std::stod(t.str()) == v) {
      s = t.str();
      break;
    }
  }
  return s;
}

}  // namespace

int SpaceSpec::dimension() const {
  switch (kind) {
    case Kind::SpaceForm:
    case Kind::Flat:
      return n;
    case Kind::FubiniStudy:
      return 2 * m;
    case Kind::LieSymmetric: {
      const LieSymmetricData* d = find_dataset(dataset);
      if (!d) throw std::invalid_argument("unknown Lie dataset: " + dataset);
      return static_cast<int>(d->m_idx.size());
    }
    case Kind::Product: {
      int s = 0;
      for (const auto& f : factors) s += f.dimension();
      return s;
    }
  }
  return 0;
}

std::string SpaceSpec::str() const {
  std::string s;
  switch (kind) {
    case Kind::SpaceForm:
      s = "sphere(" + std::to_string(n) + "," + format_double(kappa) + ")";
      break;
    case Kind::Flat:
      s = "flat(" + std::to_string(n) + ")";
      break;
    case Kind::FubiniStudy:
      s = "cpn(" + std::to_string(m) + ")";
      break;
    case Kind::LieSymmetric:
      s = "sym(" + dataset + ")";
      break;
    case Kind::Product: {
      s = "product[";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ";";
        s += factors[i].str();
      }
      s += "]";
      break;
    }
  }
  if (scale != 1.0) s += "*scale(" + format_double(scale) + ")";
  return s;
}

SpaceSpec SpaceSpec::sphere(int n, double kappa, double scale) {
  SpaceSpec s;
  s.kind = Kind::SpaceForm;
  s.n = n;
  s.kappa = kappa;
  s.scale = scale;
  return s;
}

SpaceSpec SpaceSpec::flat(int n) {
  SpaceSpec s;
  s.kind = Kind::Flat;
  s.n = n;
  return s;
}

SpaceSpec SpaceSpec::cpn(int m, double scale) {
  SpaceSpec s;
  s.kind = Kind::FubiniStudy;
  s.m = m;
  s.scale = scale;
  return s;
}

SpaceSpec SpaceSpec::sym(std::string dataset, double scale) {
  SpaceSpec s;
  s.kind = Kind::LieSymmetric;
  s.dataset = std::move(dataset);
  s.scale = scale;
  return s;
}

SpaceSpec SpaceSpec::product(std::vector<SpaceSpec> factors, double scale) {
  SpaceSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(factors);
  s.scale = scale;
  return s;
}

namespace {

void check_spec(const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceSpec::Kind::SpaceForm:
    case SpaceSpec::Kind::Flat:
      if (spec.n < 1) throw std::invalid_argument("spec: dimension must be >= 1");
      break;
    case SpaceSpec::Kind::FubiniStudy:
      if (spec.m < 1) throw std::invalid_argument("spec: cpn needs m >= 1");
      break;
    case SpaceSpec::Kind::Product:
      if (spec.factors.empty()) throw std::invalid_argument("spec: empty product");
      break;
    case SpaceSpec::Kind::LieSymmetric:
      break;
  }
}

CurvatureTensor space_form_tensor(int n, double kappa) {
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      r.at(i, j, i, j) = kappa;
      r.at(i, j, j, i) = -kappa;
    }
  return r;
}

CurvatureTensor fubini_study_tensor(int m) {
  // Holomorphic sectional curvature 4 in the frame e_1, e_2 = J e_1, ...
  // P_{ik} = g(J e_i, e_k) are the components of the Kaehler form.
  const int n = 2 * m;
  Matrix p(n, n);
  for (int k = 0; k < m; ++k) {
    p(2 * k, 2 * k + 1) = 1.0;
    p(2 * k + 1, 2 * k) = -1.0;
  }
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double did = (i == k && j == l) ? 1.0 : 0.0;
          const double dcross = (i == l && j == k) ? 1.0 : 0.0;
          r.at(i, j, k, l) = did - dcross + p(i, k) * p(j, l) - p(i, l) * p(j, k) +
                             2.0 * p(i, j) * p(k, l);
        }
  return r;
}

void embed_block(CurvatureTensor& dst, const CurvatureTensor& src, int off) {
  const int d = src.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) dst.at(off + i, off + j, off + k, off + l) = src(i, j, k, l);
}

}  // namespace

void require_symmetric_pair(const LieSymmetricData& data) {
  const int g = data.dim_g;
  if (g < 1 || data.c.size() != static_cast<std::size_t>(g) * g * g)
    throw std::invalid_argument("lie data: structure constant array size mismatch");
  const int dm = static_cast<int>(data.m_idx.size());
  if (data.inner_m.rows() != dm || data.inner_m.cols() != dm)
    throw std::invalid_argument("lie data: inner product size mismatch");
  std::vector<char> in_k(g, 0), in_m(g, 0), used(g, 0);
  for (int a : data.k_idx) {
    if (a < 0 || a >= g || used[a]) throw std::invalid_argument("lie data: bad k index");
    in_k[a] = used[a] = 1;
  }
  for (int a : data.m_idx) {
    if (a < 0 || a >= g || used[a]) throw std::invalid_argument("lie data: bad m index");
    in_m[a] = used[a] = 1;
  }
  for (int a = 0; a < g; ++a)
    if (!used[a]) throw std::invalid_argument("lie data: basis index in neither k nor m");

  double scale = 0.0;
  for (double v : data.c) scale = std::max(scale, std::abs(v));
  const double tol = 1e-10 * std::max(1.0, scale);

  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int e = 0; e < g; ++e)
        if (std::abs(data.structure(a, b, e) + data.structure(b, a, e)) > tol)
          throw std::invalid_argument("lie data: structure constants not antisymmetric");

  // Jacobi identity
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      for (int cc = 0; cc < g; ++cc)
        for (int e = 0; e < g; ++e) {
          double s = 0.0;
          for (int d = 0; d < g; ++d)
            s += data.structure(a, b, d) * data.structure(d, cc, e) +
                 data.structure(b, cc, d) * data.structure(d, a, e) +
                 data.structure(cc, a, d) * data.structure(d, b, e);
          if (std::abs(s) > tol) throw std::invalid_argument("lie data: Jacobi identity violated");
        }

  // symmetric pair containments: [k,k] in k, [k,m] in m, [m,m] in k
  auto leak = [&](int a, int b, const std::vector<char>& forbidden) {
    double s = 0.0;
    for (int e = 0; e < g; ++e)
      if (forbidden[e]) s = std::max(s, std::abs(data.structure(a, b, e)));
    return s;
  };
  for (int a : data.k_idx)
    for (int b : data.k_idx)
      if (leak(a, b, in_m) > tol)
        throw std::invalid_argument("lie data: [k,k] leaks into m (not a symmetric pair)");
  for (int a : data.k_idx)
    for (int b : data.m_idx)
      if (leak(a, b, in_k) > tol)
        throw std::invalid_argument("lie data: [k,m] leaks into k (not a symmetric pair)");
  for (int a : data.m_idx)
    for (int b : data.m_idx)
      if (leak(a, b, in_m) > tol)
        throw std::invalid_argument("lie data: [m,m] leaks into m (not a symmetric pair)");

  // Ad(k)-invariance of the inner product on m: ad_k^T G + G ad_k = 0
  for (int kk : data.k_idx) {
    Matrix ad(dm, dm);
    for (int b = 0; b < dm; ++b)
      for (int e = 0; e < dm; ++e) ad(e, b) = data.structure(kk, data.m_idx[b], data.m_idx[e]);
    const Matrix res = ad.transposed() * data.inner_m + data.inner_m * ad;
    if (res.max_abs() > 1e-9 * std::max(1.0, data.inner_m.max_abs() * (1.0 + scale)))
      throw std::invalid_argument("lie data: inner product not Ad(k)-invariant");
  }
}

CurvatureTensor lie_symmetric(const LieSymmetricData& data) {
  require_symmetric_pair(data);
  const int g = data.dim_g;
  const int n = static_cast<int>(data.m_idx.size());

  // Orthonormalize the m-basis with respect to inner_m (Gram-Schmidt on
  // coefficient columns).  B(:,a) holds the coefficients of the a-th
  // orthonormal vector over data.m_idx.
  Matrix bmat(n, n);
  for (int a = 0; a < n; ++a) bmat(a, a) = 1.0;
  auto ip = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) s += x[u] * data.inner_m(u, v) * y[v];
    return s;
  };
  for (int a = 0; a < n; ++a) {
    std::vector<double> col = bmat.col(a);
    for (int pass = 0; pass < 2; ++pass)
      for (int b = 0; b < a; ++b) {
        const std::vector<double> prev = bmat.col(b);
        const double d = ip(col, prev);
        for (int u = 0; u < n; ++u) col[u] -= d * prev[u];
      }
    const double nn = std::sqrt(ip(col, col));
    if (!(nn > 1e-12)) throw std::invalid_argument("lie data: inner product not positive definite");
    for (int u = 0; u < n; ++u) bmat(u, a) = col[u] / nn;
  }

  // bracket of vectors given in full g-coordinates
  auto bracket = [&](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> z(g, 0.0);
    for (int a = 0; a < g; ++a) {
      if (x[a] == 0.0) continue;
      for (int b = 0; b < g; ++b) {
        if (y[b] == 0.0) continue;
        for (int e = 0; e < g; ++e) z[e] += x[a] * y[b] * data.structure(a, b, e);
      }
    }
    return z;
  };

  std::vector<std::vector<double>> frame(n, std::vector<double>(g, 0.0));
  for (int a = 0; a < n; ++a)
    for (int u = 0; u < n; ++u) frame[a][data.m_idx[u]] = bmat(u, a);

  auto inner_m_full = [&](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) s += x[data.m_idx[u]] * data.inner_m(u, v) * y[data.m_idx[v]];
    return s;
  };

  CurvatureTensor r(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::vector<double> xy = bracket(frame[a], frame[b]);  // in k
      for (int cc = 0; cc < n; ++cc) {
        const std::vector<double> xyz = bracket(xy, frame[cc]);  // back in m
        for (int d = 0; d < n; ++d) {
          const double v = inner_m_full(xyz, frame[d]);
          r.at(a, b, cc, d) = v;
          r.at(b, a, cc, d) = -v;
        }
      }
    }

  // fix the global sign so sectional curvatures are >= 0 (compact type)
  double sect_sum = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) sect_sum += r(a, b, a, b);
  if (sect_sum < 0.0) r *= -1.0;

  require_valid(r);
  return r;
}

namespace {

using Cplx = std::complex<double>;
using CMat3 = std::array<std::array<Cplx, 3>, 3>;

CMat3 cmul(const CMat3& a, const CMat3& b) {
  CMat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CMat3 cbracket(const CMat3& a, const CMat3& b) {
  const CMat3 ab = cmul(a, b), ba = cmul(b, a);
  CMat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = ab[i][j] - ba[i][j];
  return c;
}

double minus_re_trace_prod(const CMat3& a, const CMat3& b) {
  Cplx t = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) t += a[i][k] * b[k][i];
  return -t.real();
}

LieSymmetricData make_su3_so3() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const Cplx im(0.0, 1.0);

  // orthonormal basis of su(3) under <X,Y> = -tr(XY):
  // k: (E_ab - E_ba)/sqrt(2);  m: i * (traceless symmetric)/norm
  std::vector<CMat3> basis(8, CMat3{});
  auto& b = basis;
  b[0][0][1] = s2, b[0][1][0] = -s2;                        // k
  b[1][0][2] = s2, b[1][2][0] = -s2;                        // k
  b[2][1][2] = s2, b[2][2][1] = -s2;                        // k
  b[3][0][0] = im * s2, b[3][1][1] = -im * s2;              // m: diag(1,-1,0)
  b[4][0][0] = im * s6, b[4][1][1] = im * s6, b[4][2][2] = -2.0 * im * s6;  // m: diag(1,1,-2)
  b[5][0][1] = im * s2, b[5][1][0] = im * s2;               // m
  b[6][0][2] = im * s2, b[6][2][0] = im * s2;               // m
  b[7][1][2] = im * s2, b[7][2][1] = im * s2;               // m

  LieSymmetricData data;
  data.name = "su3_so3";
  data.dim_g = 8;
  data.c.assign(8 * 8 * 8, 0.0);
  data.k_idx = {0, 1, 2};
  data.m_idx = {3, 4, 5, 6, 7};
  data.inner_m = Matrix::identity(5);

  for (int a = 0; a < 8; ++a)
    for (int bb = 0; bb < 8; ++bb) {
      const CMat3 br = cbracket(basis[a], basis[bb]);
      for (int e = 0; e < 8; ++e) data.set_structure(a, bb, e, minus_re_trace_prod(br, basis[e]));
    }
  return data;
}

}  // namespace

const LieSymmetricData& su3_so3_data() {
  static const LieSymmetricData data = make_su3_so3();
  return data;
}

const LieSymmetricData* find_dataset(const std::string& name) {
  if (name == "su3_so3") return &su3_so3_data();
  return nullptr;
}

LieSymmetricData load_lie_json(const nlohmann::json& j) {
  LieSymmetricData data;
  data.name = j.value("name", "unnamed");
  data.dim_g = j.at("dim").get<int>();
  if (data.dim_g < 1 || data.dim_g > 64) throw std::invalid_argument("lie json: dim out of range");
  data.c.assign(static_cast<std::size_t>(data.dim_g) * data.dim_g * data.dim_g, 0.0);
  for (const auto& v : j.at("k_indices")) data.k_idx.push_back(v.get<int>() - 1);
  for (const auto& v : j.at("m_indices")) data.m_idx.push_back(v.get<int>() - 1);
  for (const auto& e : j.at("structure_constants")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument("lie json: structure constant must be [a,b,c,value]");
    const int a = e[0].get<int>() - 1, b = e[1].get<int>() - 1, cc = e[2].get<int>() - 1;
    const double v = e[3].get<double>();
    for (int idx : {a, b, cc})
      if (idx < 0 || idx >= data.dim_g) throw std::invalid_argument("lie json: index out of range");
    data.set_structure(a, b, cc, v);
    data.set_structure(b, a, cc, -v);
  }
  const int dm = static_cast<int>(data.m_idx.size());
  if (j.contains("inner_product")) {
    const auto& ip = j.at("inner_product");
    if (static_cast<int>(ip.size()) != dm) throw std::invalid_argument("lie json: inner product size");
    data.inner_m = Matrix(dm, dm);
    for (int u = 0; u < dm; ++u) {
      if (static_cast<int>(ip[u].size()) != dm)
        throw std::invalid_argument("lie json: inner product not square");
      for (int v = 0; v < dm; ++v) data.inner_m(u, v) = ip[u][v].get<double>();
    }
  } else {
    data.inner_m = Matrix::identity(dm);
  }
  return data;
}

CurvatureTensor build(const SpaceSpec& spec, const std::vector<LieSymmetricData>& extra) {
  check_spec(spec);
  CurvatureTensor r(0);
  switch (spec.kind) {
    case SpaceSpec::Kind::SpaceForm:
      r = space_form_tensor(spec.n, spec.kappa);
      break;
    case SpaceSpec::Kind::Flat:
      r = CurvatureTensor(spec.n);
      break;
    case SpaceSpec::Kind::FubiniStudy:
      r = fubini_study_tensor(spec.m);
      break;
    case SpaceSpec::Kind::LieSymmetric: {
      const LieSymmetricData* d = find_dataset(spec.dataset);
      if (!d)
        for (const auto& e : extra)
          if (e.name == spec.dataset) d = &e;
      if (!d) throw std::invalid_argument("unknown Lie dataset: " + spec.dataset);
      r = lie_symmetric(*d);
      break;
    }
    case SpaceSpec::Kind::Product: {
      int n = 0;
      for (const auto& f : spec.factors) n += f.dimension();
      r = CurvatureTensor(n);
      int off = 0;
      for (const auto& f : spec.factors) {
        const CurvatureTensor fr = build(f, extra);
        embed_block(r, fr, off);
        off += fr.dim();
      }
      break;
    }
  }
  if (spec.scale != 1.0) r *= spec.scale;
  require_valid(r);
  return r;
}

std::vector<std::pair<int, int>> factor_blocks(const SpaceSpec& spec) {
  std::vector<std::pair<int, int>> blocks;
  if (spec.kind == SpaceSpec::Kind::Product) {
    int off = 0;
    for (const auto& f : spec.factors) {
      for (auto [o, d] : factor_blocks(f)) blocks.emplace_back(off + o, d);
      off += f.dimension();
    }
  } else {
    blocks.emplace_back(0, spec.dimension());
  }
  return blocks;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<SpaceSpec> specs;
    for (int n = 2; n <= 8; ++n) specs.push_back(SpaceSpec::sphere(n, 1.0));
    specs.push_back(SpaceSpec::flat(2));
    specs.push_back(SpaceSpec::flat(4));
    specs.push_back(SpaceSpec::product({SpaceSpec::flat(1), SpaceSpec::sphere(2, 1.0)}));
    specs.push_back(SpaceSpec::product({SpaceSpec::sphere(3, 1.0), SpaceSpec::flat(1)}));
    specs.push_back(SpaceSpec::product({SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(2, 1.0)}));
    specs.push_back(SpaceSpec::product({SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(3, 1.0)}));
    specs.push_back(SpaceSpec::product({SpaceSpec::sphere(3, 1.0), SpaceSpec::sphere(3, 1.0)}));
    specs.push_back(SpaceSpec::product(
        {SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(2, 1.0)}));
    specs.push_back(SpaceSpec::cpn(1));
    specs.push_back(SpaceSpec::cpn(2));
    specs.push_back(SpaceSpec::cpn(3));
    specs.push_back(SpaceSpec::sym("su3_so3"));

    std::vector<CatalogEntry> entries;
    entries.reserve(specs.size());
    for (auto& s : specs) entries.push_back({s.str(), std::move(s)});
    return entries;
  }();
  return catalog;
}

}  // namespace cosk
