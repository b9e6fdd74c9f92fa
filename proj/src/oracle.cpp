#include "skewcoh/oracle.hpp"

#include <string>

#include "skew_element.hpp"

namespace skewcoh {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Scalar delta(FieldSpec field, std::size_t a, std::size_t b) {
  return a == b ? Scalar::one(field) : Scalar::zero(field);
}

/// Rows of `rows` as a matrix of width `width`.
Matrix stack(FieldSpec field, std::size_t width, const std::vector<Vector>& rows) {
  return Matrix::from_rows(field, width, rows);
}

/// Coefficient vector of x ^ y on the pair basis.
Vector wedge_coords(const Vector& x, const Vector& y) {
  const std::size_t n = x.size();
  Vector out;
  for (const auto& [a, b] : wedge2_pairs(n)) out.push_back(x[a] * y[b] - x[b] * y[a]);
  return out;
}

/// Rows expressing alpha(x ^ y)[r] = 0 for each component r.
void append_alpha_vanishes(std::vector<Vector>& rows, std::size_t n, const Vector& x, const Vector& y) {
  const Vector w = wedge_coords(x, y);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = zero_vector(x.front().field(), cochain_dim(n));
    for (std::size_t p = 0; p < w.size(); ++p) row[n + p * n + r] = w[p];
    rows.push_back(std::move(row));
  }
}

void append_lambda_vanishes(std::vector<Vector>& rows, std::size_t n, const Vector& x) {
  Vector row = zero_vector(x.front().field(), cochain_dim(n));
  for (std::size_t a = 0; a < n; ++a) row[a] = x[a];
  rows.push_back(std::move(row));
}

}  // namespace

std::size_t cochain_dim(std::size_t n) { return n + n * pair_count(n); }

std::size_t sym2_index(std::size_t n, std::size_t r, std::size_t s) {
  if (r > s) std::swap(r, s);
  return r * (2 * n - r + 1) / 2 + (s - r);
}

Vector CochainTwo::to_flat() const {
  const std::size_t n = lambda.size();
  Vector flat = lambda;
  for (std::size_t p = 0; p < alpha.cols(); ++p) {
    for (std::size_t r = 0; r < n; ++r) flat.push_back(alpha(r, p));
  }
  return flat;
}

CochainTwo CochainTwo::from_flat(std::size_t element_index, std::size_t n, const Vector& flat) {
  if (flat.size() != cochain_dim(n)) throw Error(ErrorCode::DimensionMismatch, "flat cochain length");
  const FieldSpec field = flat.front().field();
  CochainTwo c{element_index, Vector(flat.begin(), flat.begin() + n), Matrix(field, n, pair_count(n))};
  for (std::size_t p = 0; p < pair_count(n); ++p) {
    for (std::size_t r = 0; r < n; ++r) c.alpha(r, p) = flat[n + p * n + r];
  }
  return c;
}

CochainTwo CochainTwo::zero(FieldSpec field, std::size_t element_index, std::size_t n) {
  return {element_index, zero_vector(field, n), Matrix(field, n, pair_count(n))};
}

Vector alpha_on(const CochainTwo& c, const Vector& x, const Vector& y) {
  return c.alpha * wedge_coords(x, y);
}

Matrix cocycle_conditions(const CyclicGroup& group, std::size_t i) {
  const FieldSpec field = group.field();
  const std::size_t n = group.dim();
  const std::size_t width = cochain_dim(n);
  const auto pairs = wedge2_pairs(n);
  const Matrix& h = group.power(i);
  const Matrix& g_inv = group.inverse_power(1);
  const Matrix m2 = wedge2(group.generator());
  std::vector<Vector> rows;

  // lambda(im T) = 0
  for (const auto& t : transfer(group).image.basis_vectors()) append_lambda_vanishes(rows, n, t);

  // (alpha - g^-1 alpha(g. ^ g.))(e_a ^ e_b) - lambda(e_b)(e_a - h e_a) + lambda(e_a)(e_b - h e_b) = 0
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [a, b] = pairs[p];
    for (std::size_t r = 0; r < n; ++r) {
      Vector row = zero_vector(field, width);
      row[n + p * n + r] += Scalar::one(field);
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t q = 0; q < pairs.size(); ++q) row[n + q * n + s] -= g_inv(r, s) * m2(q, p);
      }
      row[b] -= delta(field, r, a) - h(r, a);
      row[a] += delta(field, r, b) - h(r, b);
      rows.push_back(std::move(row));
    }
  }

  // alpha(e_a ^ e_b)(e_c - h e_c) + alpha(e_b ^ e_c)(e_a - h e_a) - alpha(e_a ^ e_c)(e_b - h e_b) = 0 in Sym^2
  const std::size_t monomials = n * (n + 1) / 2;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        std::vector<Vector> block(monomials, zero_vector(field, width));
        auto add_term = [&](std::size_t x, std::size_t y, std::size_t moved, const Scalar& sign) {
          const std::size_t p = wedge2_index(n, x, y);
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t s = 0; s < n; ++s) {
              const Scalar hat = delta(field, s, moved) - h(s, moved);
              if (hat.is_zero()) continue;
              block[sym2_index(n, r, s)][n + p * n + r] += sign * hat;
            }
          }
        };
        add_term(a, b, c, Scalar::one(field));
        add_term(b, c, a, Scalar::one(field));
        add_term(a, c, b, -Scalar::one(field));
        for (auto& row : block) rows.push_back(std::move(row));
      }
    }
  }
  return stack(field, width, rows);
}

Matrix coboundary_matrix(const CyclicGroup& group, std::size_t i) {
  const FieldSpec field = group.field();
  const std::size_t n = group.dim();
  const auto pairs = wedge2_pairs(n);
  const Matrix& g = group.generator();
  const Matrix& h = group.power(i);
  Matrix out(field, cochain_dim(n), n);
  for (std::size_t j = 0; j < n; ++j) {
    // lambda(e_a) = f(e_a - g e_a)
    for (std::size_t a = 0; a < n; ++a) out(a, j) = delta(field, j, a) - g(j, a);
    // alpha(e_a ^ e_b) = f(e_b)(e_a - h e_a) - f(e_a)(e_b - h e_b)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [a, b] = pairs[p];
      for (std::size_t r = 0; r < n; ++r) {
        Scalar value = Scalar::zero(field);
        if (j == b) value += delta(field, r, a) - h(r, a);
        if (j == a) value -= delta(field, r, b) - h(r, b);
        out(n + p * n + r, j) = value;
      }
    }
  }
  return out;
}

std::vector<Matrix> coboundary_map(const CyclicGroup& group) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < group.order(); ++i) out.push_back(coboundary_matrix(group, i));
  return out;
}

Matrix distinguished_subspace(const CyclicGroup& group, std::size_t i) {
  const FieldSpec field = group.field();
  const std::size_t n = group.dim();
  const std::size_t width = cochain_dim(n);
  const ElementData data = element_data(group, i);
  std::vector<Vector> rows;

  if (data.codim > 2) return Matrix::identity(field, width);

  // pi_h o alpha = 0, with pi_h the projection onto V_h along its complement
  if (data.moved_space.dim() > 0) {
    const Matrix functionals = coordinate_functionals(vstack(data.moved_space.basis(), data.moved_complement.basis()));
    for (std::size_t s = 0; s < data.moved_space.dim(); ++s) {
      for (std::size_t p = 0; p < pair_count(n); ++p) {
        Vector row = zero_vector(field, width);
        for (std::size_t r = 0; r < n; ++r) row[n + p * n + r] = functionals(s, r);
        rows.push_back(std::move(row));
      }
    }
  }

  const auto fixed = data.fixed_space.basis_vectors();
  switch (data.codim) {
    case 0:
      for (const auto& c : complement(invariant_space(group)).basis_vectors()) append_lambda_vanishes(rows, n, c);
      break;
    case 1:
      for (std::size_t x = 0; x < fixed.size(); ++x) {
        for (std::size_t y = x + 1; y < fixed.size(); ++y) append_alpha_vanishes(rows, n, fixed[x], fixed[y]);
      }
      if (!data.chi_of_generator.is_one()) {
        for (const auto& c : data.fixed_complement.basis_vectors()) append_lambda_vanishes(rows, n, c);
      }
      break;
    case 2:
      for (const auto& u : fixed) {
        for (std::size_t j = 0; j < n; ++j) append_alpha_vanishes(rows, n, u, unit_vector(field, n, j));
        append_lambda_vanishes(rows, n, u);
      }
      break;
    default:
      break;
  }
  return stack(field, width, rows);
}

PerElementComplex per_element_cohomology(const CyclicGroup& group, std::size_t i) {
  PerElementComplex out{i, cocycle_conditions(group, i), coboundary_matrix(group, i), 0, 0, 0,
                        distinguished_subspace(group, i)};
  const std::size_t width = cochain_dim(group.dim());
  out.z_dim = width - rank(out.cocycle_condition_matrix);
  out.b_dim = rank(out.coboundary_matrix);
  ensure((out.cocycle_condition_matrix * out.coboundary_matrix).is_zero(),
         "coboundaries must satisfy the cocycle conditions at g^" + std::to_string(i));
  out.hh_dim = out.z_dim - out.b_dim;
  return out;
}

std::vector<CochainTwo> representative_basis(const CyclicGroup& group, std::size_t i) {
  const PerElementComplex complex = per_element_cohomology(group, i);
  const Subspace reps = kernel_basis(vstack(complex.cocycle_condition_matrix, complex.distinguished_constraints));
  if (reps.dim() != complex.hh_dim) {
    throw Error(ErrorCode::DimensionMismatch, "distinguished cocycles at g^" + std::to_string(i) + " have dimension " +
                                                  std::to_string(reps.dim()) + ", expected " +
                                                  std::to_string(complex.hh_dim));
  }
  std::vector<CochainTwo> out;
  for (const auto& v : reps.basis_vectors()) out.push_back(CochainTwo::from_flat(i, group.dim(), v));
  return out;
}

std::pair<CochainTwo, CochainOne> reduce_to_representative(const CyclicGroup& group, const CochainTwo& gamma) {
  const std::size_t i = gamma.element_index;
  const std::size_t n = group.dim();
  const Vector flat = gamma.to_flat();
  if (flat.size() != cochain_dim(n)) throw Error(ErrorCode::DimensionMismatch, "cochain has the wrong shape");
  if (!is_zero(cocycle_conditions(group, i) * flat)) {
    throw Error(ErrorCode::NotACocycle, "cochain at g^" + std::to_string(i) + " fails the cocycle conditions");
  }
  const Matrix b = coboundary_matrix(group, i);
  const Matrix d = distinguished_subspace(group, i);
  const Matrix db = d * b;
  const std::optional<Vector> f = solve(db, d * flat);
  ensure(f.has_value(), "no distinguished representative in the class");
  // Any other solution differs by ker(DB); it must not move the representative.
  for (const auto& k : kernel_basis(db).basis_vectors()) ensure(is_zero(b * k), "representative is not unique");
  return {CochainTwo::from_flat(i, n, flat - b * *f), CochainOne{i, *f}};
}

std::size_t assembled_index(const CyclicGroup& group, std::size_t i, std::size_t k) {
  const std::size_t n = group.dim();
  const std::size_t order = group.order();
  if (k < n) return ((i + 1) % order) * n + k;
  return order * n + i * (cochain_dim(n) - n) + (k - n);
}

namespace {

using detail::SkewContext;

struct GlobalCochain {
  std::vector<SkewContext::GroupPart> lambda;   // lambda(e_a)
  std::vector<SkewContext::VectorPart> alpha;   // alpha(pair p)
};

GlobalCochain unpack(const CyclicGroup& group, const SkewContext& ctx, const Vector& flat) {
  const std::size_t n = group.dim();
  const std::size_t order = group.order();
  const auto pairs = wedge2_pairs(n);
  GlobalCochain c{std::vector<SkewContext::GroupPart>(n, ctx.zero_group()),
                  std::vector<SkewContext::VectorPart>(pairs.size(), ctx.zero_vector_part())};
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t a = 0; a < n; ++a) c.lambda[a][k] = flat[k * n + a];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t r = 0; r < n; ++r) c.alpha[p][k][r] = flat[order * n + k * n * pairs.size() + p * n + r];
    }
  }
  return c;
}

Vector pack(const CyclicGroup& group, const GlobalCochain& c) {
  const std::size_t n = group.dim();
  const std::size_t order = group.order();
  const std::size_t pairs = pair_count(n);
  Vector flat = zero_vector(group.field(), order * cochain_dim(n));
  for (std::size_t k = 0; k < order; ++k) {
    for (std::size_t a = 0; a < n; ++a) flat[k * n + a] = c.lambda[a][k];
    for (std::size_t p = 0; p < pairs; ++p) {
      for (std::size_t r = 0; r < n; ++r) flat[order * n + k * n * pairs + p * n + r] = c.alpha[p][k][r];
    }
  }
  return flat;
}

SkewContext::GroupPart lambda_of(const SkewContext& ctx, const GlobalCochain& c, const Vector& u) {
  SkewContext::GroupPart out = ctx.zero_group();
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (!u[a].is_zero()) out = out + u[a] * c.lambda[a];
  }
  return out;
}

SkewContext::VectorPart alpha_of(const SkewContext& ctx, const GlobalCochain& c, const Vector& x, const Vector& y) {
  SkewContext::VectorPart out = ctx.zero_vector_part();
  const Vector w = wedge_coords(x, y);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (!w[p].is_zero()) SkewContext::add(out, c.alpha[p], w[p]);
  }
  return out;
}

void append(Vector& out, const SkewContext::VectorPart& x) {
  for (const auto& part : x) out.insert(out.end(), part.begin(), part.end());
}

Vector evaluate_conditions(const CyclicGroup& group, const SkewContext& ctx, const Vector& flat) {
  const std::size_t n = group.dim();
  const std::size_t order = group.order();
  const FieldSpec field = group.field();
  const GlobalCochain c = unpack(group, ctx, flat);
  const Scalar one = Scalar::one(field);
  Vector out;

  // g^N u = u g^N: the t-coefficient sum_j g^j lambda(g^(N-1-j) u) g^(N-1-j) vanishes.
  for (std::size_t a = 0; a < n; ++a) {
    SkewContext::GroupPart total = ctx.zero_group();
    for (std::size_t j = 0; j < order; ++j) {
      const Vector u = group.power(order - 1 - j) * unit_vector(field, n, a);
      total = total + ctx.shift(lambda_of(ctx, c, u), order - 1);
    }
    out.insert(out.end(), total.begin(), total.end());
  }

  // g(uv - vu) = g alpha(u ^ v), expanded both ways.
  for (const auto& [a, b] : wedge2_pairs(n)) {
    const Vector u = unit_vector(field, n, a);
    const Vector v = unit_vector(field, n, b);
    const Vector gu = group.generator() * u;
    const Vector gv = group.generator() * v;
    SkewContext::VectorPart total = ctx.left_by_group(1 % order, alpha_of(ctx, c, u, v));
    SkewContext::add(total, ctx.right_by_group(alpha_of(ctx, c, gu, gv), 1 % order), -one);
    SkewContext::add(total, ctx.vector_times_group(gu, lambda_of(ctx, c, v)), -one);
    SkewContext::add(total, ctx.group_times_vector(lambda_of(ctx, c, u), v), -one);
    SkewContext::add(total, ctx.vector_times_group(gv, lambda_of(ctx, c, u)), one);
    SkewContext::add(total, ctx.group_times_vector(lambda_of(ctx, c, v), u), one);
    append(out, total);
  }

  // (uv)w = u(vw): the cyclic sum of commutators with alpha vanishes.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t d = b + 1; d < n; ++d) {
        const Vector u = unit_vector(field, n, a);
        const Vector v = unit_vector(field, n, b);
        const Vector w = unit_vector(field, n, d);
        SkewContext::VectorPart total = ctx.commutator(u, alpha_of(ctx, c, v, w));
        SkewContext::add(total, ctx.commutator(v, alpha_of(ctx, c, w, u)), one);
        SkewContext::add(total, ctx.commutator(w, alpha_of(ctx, c, u, v)), one);
        append(out, total);
      }
    }
  }
  return out;
}

/// Changing generators u -> u + t f(u) with f: V -> FG.
Vector evaluate_coboundary(const CyclicGroup& group, const SkewContext& ctx, const Vector& f_flat) {
  const std::size_t n = group.dim();
  const std::size_t order = group.order();
  const FieldSpec field = group.field();
  const Scalar one = Scalar::one(field);
  auto f_of = [&](const Vector& u) {
    SkewContext::GroupPart out = ctx.zero_group();
    for (std::size_t k = 0; k < order; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[k] += u[j] * f_flat[k * n + j];
    }
    return out;
  };
  GlobalCochain c{std::vector<SkewContext::GroupPart>(n, ctx.zero_group()),
                  std::vector<SkewContext::VectorPart>(pair_count(n), ctx.zero_vector_part())};
  for (std::size_t a = 0; a < n; ++a) {
    const Vector u = unit_vector(field, n, a);
    c.lambda[a] = ctx.shift(f_of(u), 1 % order) - ctx.shift(f_of(group.generator() * u), 1 % order);
  }
  const auto pairs = wedge2_pairs(n);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vector u = unit_vector(field, n, pairs[p].first);
    const Vector v = unit_vector(field, n, pairs[p].second);
    SkewContext::VectorPart total = ctx.vector_times_group(u, f_of(v));
    SkewContext::add(total, ctx.group_times_vector(f_of(u), v), one);
    SkewContext::add(total, ctx.vector_times_group(v, f_of(u)), -one);
    SkewContext::add(total, ctx.group_times_vector(f_of(v), u), -one);
    c.alpha[p] = std::move(total);
  }
  return pack(group, c);
}

}  // namespace

AssembledComplex assembled_complex(const CyclicGroup& group) {
  const SkewContext ctx(group);
  const FieldSpec field = group.field();
  const std::size_t width = group.order() * cochain_dim(group.dim());
  std::vector<Vector> condition_columns;
  for (std::size_t k = 0; k < width; ++k) {
    condition_columns.push_back(evaluate_conditions(group, ctx, unit_vector(field, width, k)));
  }
  const std::size_t sources = group.order() * group.dim();
  std::vector<Vector> coboundary_columns;
  for (std::size_t k = 0; k < sources; ++k) {
    coboundary_columns.push_back(evaluate_coboundary(group, ctx, unit_vector(field, sources, k)));
  }
  AssembledComplex out{Matrix::from_columns(field, condition_columns.front().size(), condition_columns),
                       Matrix::from_columns(field, width, coboundary_columns), 0, 0};
  out.z_dim = width - rank(out.cocycle_condition_matrix);
  out.b_dim = rank(out.coboundary_matrix);
  ensure((out.cocycle_condition_matrix * out.coboundary_matrix).is_zero(), "assembled complex: d^2 != 0");
  return out;
}

}  // namespace skewcoh
