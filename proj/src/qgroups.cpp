#include "aw/qgroups.hpp"

#include <algorithm>
#include <tuple>

#include "aw/classify.hpp"
#include "aw/linalg.hpp"

namespace aw {

namespace {

ExactMatrix vstack(std::initializer_list<ExactMatrix> parts) {
  std::size_t rows = 0, cols = parts.begin()->cols();
  for (const auto& p : parts) rows += p.rows();
  ExactMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = p(i, j);
    r0 += p.rows();
  }
  return out;
}

bool tridiagonal(const ExactMatrix& m, bool require_irreducible) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap > 1 && !m(i, j).is_zero()) return false;
      if (gap == 1 && require_irreducible && m(i, j).is_zero()) return false;
    }
  return true;
}

bool diagonal(const ExactMatrix& m) { return tridiagonal(m, false) && [&] {
  for (std::size_t i = 0; i + 1 < m.rows(); ++i)
    if (!m(i, i + 1).is_zero() || !m(i + 1, i).is_zero()) return false;
  return true;
}(); }

void check_q(const Scalar& q) {
  if (q.is_zero() || is_root_of_unity(q)) throw PreconditionError("q must be nonzero and not a root of unity");
}

}  // namespace

bool uq_relations_hold(const Uqsl2Rep& r) {
  const std::size_t d = r.dim();
  const Scalar& q = r.q;
  const ExactMatrix id = ExactMatrix::identity(d);
  if (!(r.k * r.k_inv == id && r.k_inv * r.k == id)) return false;
  if (!(r.k * r.e == r.e * r.k * (q * q))) return false;
  if (!(r.k * r.f == r.f * r.k * (q * q).inverse())) return false;
  return commutator(r.e, r.f) == (r.k - r.k_inv) * (q - q.inverse()).inverse();
}

Uqsl2Rep standard_module(int n, int eps, const Scalar& q) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (eps != 1 && eps != -1) throw PreconditionError("type must be +1 or -1");
  check_q(q);
  const std::size_t d = static_cast<std::size_t>(n) + 1;
  Uqsl2Rep r{ExactMatrix(d, d), ExactMatrix(d, d), ExactMatrix(d, d), ExactMatrix(d, d), q, n, eps};
  const Scalar s(eps);
  for (int i = 0; i <= n; ++i) {
    r.k(i, i) = s * pow(q, n - 2 * i);
    r.k_inv(i, i) = s * pow(q, 2 * i - n);
    if (i >= 1) {
      r.e(i - 1, i) = s * qint(n - i + 1, q);
      r.f(i, i - 1) = qint(i, q);
    }
  }
  return r;
}

EquitableTriple equitable(const Uqsl2Rep& r) {
  const Scalar& q = r.q;
  const Scalar d = q - q.inverse();
  return {r.k_inv - r.e * r.k_inv * (q.inverse() * d), r.k, r.k_inv, r.k_inv + r.f * d};
}

Uqsl2Rep from_equitable(const EquitableTriple& t, const Scalar& q) {
  const Scalar di = (q - q.inverse()).inverse();
  const ExactMatrix id = ExactMatrix::identity(t.y.rows());
  return {(id - t.x * t.y) * (q * di), (t.z - t.y_inv) * di, t.y, t.y_inv, q, std::nullopt, std::nullopt};
}

ExactMatrix casimir(const Uqsl2Rep& r) {
  const Scalar& q = r.q;
  const Scalar d = q - q.inverse();
  return r.e * r.f + (r.k * q.inverse() + r.k_inv * q) * (d * d).inverse();
}

Scalar casimir_scalar(int n, int eps, const Scalar& q) {
  const Scalar d = q - q.inverse();
  return Scalar(eps) * (pow(q, n + 1) + pow(q, -n - 1)) / (d * d);
}

ExactMatrix equitable_rotator(const Uqsl2Rep& rep) {
  auto t = equitable(rep);
  const std::pair<ExactMatrix, ExactMatrix> pairs[] = {{t.x, t.y}, {t.y, t.z}, {t.z, t.x}};
  auto l = intertwiner(pairs);
  if (!l) throw PreconditionError("equitable_rotator: no invertible solution (module not irreducible)");
  return *l;
}

std::array<ExactMatrix, 3> equitable_images(const EquitableTriple& t, const Scalar& q, const Scalar& a, const Scalar& b,
                                            const Scalar& c) {
  const Scalar di = (q - q.inverse()).inverse();
  auto one = [&](const ExactMatrix& u, const ExactMatrix& v, const Scalar& s, const Scalar& r) {
    return u * s + v * s.inverse() + commutator(u, v) * (r * di);
  };
  return {one(t.x, t.y, a, b * c.inverse()), one(t.y, t.z, b, c * a.inverse()), one(t.z, t.x, c, a * b.inverse())};
}

namespace {

Realization finish(int eps, const EquitableTriple& t, const ExactMatrix& basis, const ModuleParams& p,
                   const DeltaRep& rep) {
  Realization out{eps, from_equitable(t, p.q), t, basis, {}};
  auto img = equitable_images(t, p.q, p.a, p.b, p.c);
  out.residual_zero = {img[0] == rep.A, img[1] == rep.B, img[2] == rep.C};
  return out;
}

Realization realize_type1(const ModuleParams& p) {
  const int n = p.n;
  const Scalar& q = p.q;
  auto b24 = change_basis24(p, GroupElem24{1, -1, {1, 0, 2}});
  std::vector<Scalar> scale(n + 1);
  Scalar ci(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) ci *= (pow(q, i) - pow(q, -i)) * (p.b.inverse() - pow(q, n - 2 * i + 1) * p.a.inverse() * p.c);
    if (ci.is_zero()) throw std::runtime_error("realize_uq: c_i vanishes for parameters in T");
    scale[i] = ci.inverse();
  }
  const ExactMatrix basis = b24.transition * ExactMatrix::diagonal(scale);
  const ExactMatrix basis_inv = *inverse(basis);
  auto std_t = equitable(standard_module(n, 1, q));
  auto conj = [&](const ExactMatrix& m) { return basis * m * basis_inv; };
  EquitableTriple t{conj(std_t.x), conj(std_t.y), conj(std_t.y_inv), conj(std_t.z)};
  return finish(1, t, basis, p, vn_module(p));
}

}  // namespace

std::optional<Realization> realize_uq(const ModuleParams& params, int eps) {
  if (eps != 1 && eps != -1) throw PreconditionError("type must be +1 or -1");
  if (!irreducible_criterion(params)) throw PreconditionError("realize_uq: V_n(a, b, c) is reducible");
  std::optional<Realization> out;
  if (eps == 1) {
    out = realize_type1(params);
  } else {
    // Negating x, y, z turns a type-1 module satisfying the equations for (-a, -b, -c) into a type -1 module
    // for (a, b, c); transport it when V_n(-a, -b, -c) is isomorphic to V_n(a, b, c).
    ModuleParams neg = params;
    neg.a = -params.a;
    neg.b = -params.b;
    neg.c = -params.c;
    if (!irreducible_criterion(neg)) return std::nullopt;
    auto m = isomorphic(neg, params);
    if (!m) return std::nullopt;
    auto base = realize_type1(neg);
    if (!base.ok()) return std::nullopt;
    const ExactMatrix m_inv = *inverse(*m);
    auto conj = [&](const ExactMatrix& x) { return -(m_inv * x * *m); };
    EquitableTriple t{conj(base.xyz.x), conj(base.xyz.y), conj(base.xyz.y_inv), conj(base.xyz.z)};
    out = finish(-1, t, m_inv * base.basis, params, vn_module(params));
  }
  if (!out->ok() || !uq_relations_hold(out->module)) return std::nullopt;
  return out;
}

Uqsl2Rep coproduct(const Uqsl2Rep& r1, const Uqsl2Rep& r2) {
  if (r1.q != r2.q) throw PreconditionError("coproduct: q differs");
  const ExactMatrix i1 = ExactMatrix::identity(r1.dim()), i2 = ExactMatrix::identity(r2.dim());
  return {kron(r1.e, i2) + kron(r1.k, r2.e), kron(r1.f, r2.k_inv) + kron(i1, r2.f), kron(r1.k, r2.k),
          kron(r1.k_inv, r2.k_inv), r1.q, std::nullopt, std::nullopt};
}

std::map<std::pair<int, int>, int> CGDecomposition::multiplicities() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& b : blocks) ++out[{b.n, b.eps}];
  return out;
}

CGDecomposition cg_decompose(const Uqsl2Rep& rep) {
  const std::size_t d = rep.dim();
  const Scalar& q = rep.q;
  CGDecomposition out;
  std::vector<ExactMatrix> columns;
  for (int n = static_cast<int>(d) - 1; n >= 0; --n)
    for (int eps : {1, -1}) {
      const ExactMatrix weight = rep.k - ExactMatrix::scalar(d, Scalar(eps) * pow(q, n));
      for (const auto& h : kernel(vstack({rep.e, weight}))) {
        CGBlock block{n, eps, ExactMatrix(d, static_cast<std::size_t>(n) + 1)};
        ExactMatrix v = h;
        for (int i = 0; i <= n; ++i) {
          if (i > 0) v = rep.f * v * qint(i, q).inverse();
          for (std::size_t r = 0; r < d; ++r) block.basis(r, i) = v(r, 0);
          columns.push_back(v);
        }
        if (!(rep.f * v).is_zero()) throw std::runtime_error("cg_decompose: f does not terminate on a string");
        out.blocks.push_back(std::move(block));
      }
    }
  if (columns.size() != d) throw std::runtime_error("cg_decompose: Casimir eigenvalues do not account for the module");
  out.basis = ExactMatrix::from_columns(columns);
  if (rank(out.basis) != d) throw std::runtime_error("cg_decompose: module is not completely reducible");
  return out;
}

namespace {

struct Coupled {
  std::vector<ExactMatrix> vectors;
  std::vector<std::array<int, 3>> labels;
};

void sort_coupled(Coupled& c) {
  std::vector<std::size_t> idx(c.vectors.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = c.labels[x];
    const auto& b = c.labels[y];
    return std::make_tuple(-a[0], a[1], -a[2]) < std::make_tuple(-b[0], b[1], -b[2]);
  });
  Coupled s;
  for (auto i : idx) {
    s.vectors.push_back(c.vectors[i]);
    s.labels.push_back(c.labels[i]);
  }
  c = std::move(s);
}

bool matches_cg_formula(const CGDecomposition& dec, int m, int n) {
  std::map<std::pair<int, int>, int> expect;
  for (int i = 0; i <= std::min(m, n); ++i) ++expect[{m + n - 2 * i, 1}];
  return dec.multiplicities() == expect;
}

// Blocks of consecutive equal (total n, position) labels.
std::vector<std::pair<std::size_t, std::size_t>> label_blocks(const std::vector<std::array<int, 3>>& labels) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= labels.size(); ++i)
    if (i == labels.size() || labels[i][0] != labels[start][0] || labels[i][1] != labels[start][1]) {
      out.push_back({start, i - start});
      start = i;
    }
  return out;
}

bool block_diagonal(const ExactMatrix& m, const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
  std::vector<std::size_t> owner(m.rows());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t i = 0; i < blocks[b].second; ++i) owner[blocks[b].first + i] = b;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (owner[i] != owner[j] && !m(i, j).is_zero()) return false;
  return true;
}

}  // namespace

RacahData racah(int m, int n, int p, const Scalar& q) {
  check_q(q);
  if (m < 0 || n < 0 || p < 0) throw PreconditionError("racah: dimensions must be nonnegative");
  const Uqsl2Rep vm = standard_module(m, 1, q), vn = standard_module(n, 1, q), vp = standard_module(p, 1, q);
  const Uqsl2Rep t12 = coproduct(vm, vn), t23 = coproduct(vn, vp), t123 = coproduct(t12, vp);
  const std::size_t dm = vm.dim(), dn = vn.dim(), dp = vp.dim(), total = t123.dim();
  const ExactMatrix im = ExactMatrix::identity(dm), in = ExactMatrix::identity(dn), ip = ExactMatrix::identity(dp);
  const Scalar d = q - q.inverse(), d2 = d * d;

  RacahData out;
  out.dims = {m, n, p};
  const ExactMatrix a_img = kron(casimir(t12), ip) * d2;
  const ExactMatrix b_img = kron(im, casimir(t23)) * d2;
  out.gamma = (kron(kron(casimir(vm), in), casimir(vp)) + kron(kron(im, casimir(vn)), ip) * casimir(t123)) * (d2 * d2);
  out.rep = DeltaRep{a_img, b_img, c_from_gamma(a_img, b_img, out.gamma, q), q, std::nullopt, total};
  out.relations = check_relations(out.rep);

  const CGDecomposition cg12 = cg_decompose(t12), cg23 = cg_decompose(t23);
  out.cg_ok = matches_cg_formula(cg12, m, n) && matches_cg_formula(cg23, n, p);

  Coupled u, v;
  for (const auto& blk : cg12.blocks) {
    const CGDecomposition inner = cg_decompose(coproduct(standard_module(blk.n, blk.eps, q), vp));
    const ExactMatrix lift = kron(blk.basis, ip);
    for (const auto& ib : inner.blocks)
      for (int s = 0; s <= ib.n; ++s) {
        u.vectors.push_back(lift * ib.basis.col(s));
        u.labels.push_back({ib.n, s, blk.n});
      }
  }
  for (const auto& blk : cg23.blocks) {
    const CGDecomposition inner = cg_decompose(coproduct(vm, standard_module(blk.n, blk.eps, q)));
    const ExactMatrix lift = kron(im, blk.basis);
    for (const auto& ib : inner.blocks)
      for (int s = 0; s <= ib.n; ++s) {
        v.vectors.push_back(lift * ib.basis.col(s));
        v.labels.push_back({ib.n, s, blk.n});
      }
  }
  sort_coupled(u);
  sort_coupled(v);
  out.u_labels = u.labels;
  out.v_labels = v.labels;
  out.u_basis = ExactMatrix::from_columns(u.vectors);
  out.v_basis = ExactMatrix::from_columns(v.vectors);
  for (const auto& blk : cg_decompose(t123).blocks) ++out.components[blk.n];

  auto u_inv = inverse(out.u_basis), v_inv = inverse(out.v_basis);
  if (!u_inv || !v_inv) throw std::runtime_error("racah: coupled vectors are dependent");
  out.transition = *u_inv * out.v_basis;
  out.a_in_v = *v_inv * a_img * out.v_basis;
  out.b_in_u = *u_inv * b_img * out.u_basis;
  out.u_diagonalizes_a = diagonal(*u_inv * a_img * out.u_basis);
  out.v_diagonalizes_b = diagonal(*v_inv * b_img * out.v_basis);

  const auto blocks = label_blocks(out.u_labels);
  bool shape = out.u_labels.size() == out.v_labels.size() && label_blocks(out.v_labels) == blocks;
  for (std::size_t i = 0; shape && i < u.labels.size(); ++i)
    shape = u.labels[i][0] == v.labels[i][0] && u.labels[i][1] == v.labels[i][1];
  shape = shape && block_diagonal(out.a_in_v, blocks) && block_diagonal(out.b_in_u, blocks) &&
          block_diagonal(out.transition, blocks);
  bool irr = shape;
  for (const auto& [start, len] : blocks) {
    if (!shape) break;
    const ExactMatrix av = out.a_in_v.block(start, start, len, len), bu = out.b_in_u.block(start, start, len, len);
    shape = shape && tridiagonal(av, false) && tridiagonal(bu, false);
    irr = irr && tridiagonal(av, true) && tridiagonal(bu, true);
  }
  out.tridiagonal_ok = shape;
  out.irreducible_tridiagonal = shape && irr;
  return out;
}

So3Report so3_check(int n, const Scalar& q, const So3Family& family) {
  check_q(q);
  ModuleParams params{n, q, Scalar(1), Scalar(1), Scalar(1), std::nullopt};
  if (family.classical) {
    const auto& e = family.eps;
    for (int s : e)
      if (s != 1 && s != -1) throw PreconditionError("so3_check: signs must be +1 or -1");
    if (e[0] * e[1] * e[2] != 1) throw PreconditionError("so3_check: signs must satisfy eps_i = eps_{i-1} eps_{i+1}");
    const Scalar top = pow(q, n + 1);
    params.a = -Scalar(e[0]) * top;
    params.b = -Scalar(e[1]) * top;
    params.c = -Scalar(e[2]) * top;
  } else {
    params.a = params.b = params.c = Scalar::i();
  }
  const DeltaRep rep = vn_module(params);
  const Scalar k = (pow(q, -2) - pow(q, 2)).inverse();
  So3Report out{params, {rep.A * k, rep.B * k, rep.C * k}, {}, {}, false};
  const Scalar qi = q.inverse();
  for (int j = 0; j < 3; ++j) {
    const ExactMatrix& k1 = out.K[(j + 1) % 3];
    const ExactMatrix& k2 = out.K[(j + 2) % 3];
    out.relation_zero[j] = k1 * k2 * q - k2 * k1 * qi == out.K[j];
  }
  const auto rel = check_relations(rep);
  out.central_zero = rel.central && rel.scalar();
  for (int j = 0; j < 3; ++j) {
    out.central_scalars[j] = rel.scalars[j].value_or(Scalar(1));
    out.central_zero = out.central_zero && out.central_scalars[j].is_zero();
  }
  return out;
}

}  // namespace aw
