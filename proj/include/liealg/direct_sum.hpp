#pragma once

// Direct sums and their automorphisms: B = theta + zeta, where theta permutes
// isomorphic summands blockwise and zeta maps L into the centre, killing L'.

#include "liealg/automorphisms.hpp"
#include "liealg/descriptor.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace liealg {

/// Component-major direct sum: the basis of part 1, then part 2, and so on.
struct SumStructure {
  LieAlgebra total;
  std::vector<LieAlgebra> parts;
  std::vector<std::size_t> offsets;
  std::vector<std::optional<std::string>> labels;

  std::size_t dim() const { return total.dim(); }
  std::size_t size() const { return parts.size(); }
  std::size_t part_dim(std::size_t i) const { return parts[i].dim(); }

  Subspace component(std::size_t i) const {
    std::vector<Vector<Rational>> rows;
    for (std::size_t r = 0; r < parts[i].dim(); ++r) rows.push_back(unit_vector<Rational>(dim(), offsets[i] + r));
    return Subspace::span(rows, dim());
  }

  /// The coordinate projection onto component i.
  Matrix<Rational> projection(std::size_t i) const {
    Matrix<Rational> p(dim(), dim());
    for (std::size_t r = 0; r < parts[i].dim(); ++r) p(offsets[i] + r, offsets[i] + r) = 1;
    return p;
  }
};

inline SumStructure direct_sum(const std::vector<LieAlgebra>& parts) {
  SumStructure s;
  std::vector<BracketEntry> entries;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    s.offsets.push_back(offset);
    s.labels.push_back(p.label());
    for (auto e : p.tensor().entries()) {
      e.i += offset;
      e.j += offset;
      e.k += offset;
      entries.push_back(std::move(e));
    }
    offset += p.dim();
  }
  s.parts = parts;
  s.total = LieAlgebra::unchecked(offset, entries);
  return s;
}

/// Linear maps zeta (row convention) with zeta(L) in Z(L) and zeta(L') = 0.
struct ZetaSpace {
  std::size_t ambient_dim = 0;  // R; the space itself has basis.size() elements
  std::vector<Matrix<Rational>> basis;
};

inline ZetaSpace zeta_space(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  ZetaSpace out{n, {}};
  const Subspace z = center(l);
  const Subspace derived = derived_subalgebra(l);
  if (z.is_zero()) return out;
  const Matrix<Rational> ann = z.annihilator();  // row_i(zeta) . w = 0 for w in ann
  std::vector<Vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t w = 0; w < ann.rows(); ++w) {
      Vector<Rational> eq(n * n, Rational(0));
      for (std::size_t k = 0; k < n; ++k) eq[i * n + k] = ann(w, k);
      rows.push_back(std::move(eq));
    }
  for (std::size_t d = 0; d < derived.dim(); ++d)
    for (std::size_t k = 0; k < n; ++k) {
      Vector<Rational> eq(n * n, Rational(0));
      for (std::size_t i = 0; i < n; ++i) eq[i * n + k] = derived.basis()(d, i);
      rows.push_back(std::move(eq));
    }
  Matrix<Rational> ns;
  if (rows.empty()) {
    ns = Matrix<Rational>::identity(n * n);
  } else {
    ns = nullspace(Matrix<Rational>::from_rows(rows, n * n));
  }
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    Matrix<Rational> m(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m(a, b) = ns(r, a * n + b);
    out.basis.push_back(std::move(m));
  }
  return out;
}

inline bool in_zeta_space(const LieAlgebra& l, const Matrix<Rational>& zeta) {
  const Subspace z = center(l);
  for (std::size_t r = 0; r < zeta.rows(); ++r)
    if (!z.contains(zeta.row(r))) return false;
  const Subspace derived = derived_subalgebra(l);
  return derived.is_zero() || (derived.basis() * zeta).is_zero();
}

/// An isomorphism between two summands, in their local bases (row convention).
struct Identification {
  std::size_t from = 0;
  std::size_t to = 0;
  Matrix<Rational> matrix;
};

struct SumAutDescriptor {
  SumStructure sum;
  std::vector<AutDescriptor> parts;
  std::vector<std::size_t> class_of;            // class index per component
  std::vector<Matrix<Rational>> from_class_rep; // iso: representative -> component
  ZetaSpace zeta;

  std::vector<std::vector<std::size_t>> classes() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < class_of.size(); ++i) {
      if (class_of[i] >= out.size()) out.resize(class_of[i] + 1);
      out[class_of[i]].push_back(i);
    }
    return out;
  }

  /// Isomorphism M_a -> M_b for components in the same class.
  Matrix<Rational> identification(std::size_t a, std::size_t b) const {
    if (class_of.at(a) != class_of.at(b)) throw Error("components are not in the same isomorphism class");
    if (a == b) return Matrix<Rational>::identity(sum.part_dim(a));
    return *inverse(from_class_rep[a]) * from_class_rep[b];
  }
};

/// Groups components into isomorphism classes: identical tensors, or an
/// explicit caller-supplied isomorphism (validated).
inline SumAutDescriptor sum_descriptor(const SumStructure& sum, std::vector<AutDescriptor> parts,
                                       const std::vector<Identification>& extra = {}) {
  const std::size_t r = sum.size();
  if (parts.size() != r) throw Error("need one descriptor per component");
  for (std::size_t i = 0; i < r; ++i)
    if (parts[i].dim != sum.part_dim(i))
      throw Error("descriptor " + std::to_string(i + 1) + " has dimension " + std::to_string(parts[i].dim) +
                  ", component has " + std::to_string(sum.part_dim(i)));
  SumAutDescriptor d;
  d.sum = sum;
  d.parts = std::move(parts);
  d.class_of.assign(r, r);
  d.from_class_rep.resize(r);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (d.class_of[i] != r) continue;
    d.class_of[i] = classes;
    d.from_class_rep[i] = Matrix<Rational>::identity(sum.part_dim(i));
    for (std::size_t j = i + 1; j < r; ++j)
      if (d.class_of[j] == r && sum.parts[j] == sum.parts[i]) {
        d.class_of[j] = classes;
        d.from_class_rep[j] = Matrix<Rational>::identity(sum.part_dim(j));
      }
    ++classes;
  }
  for (const auto& id : extra) {
    if (id.from >= r || id.to >= r) throw Error("identification refers to a missing component");
    if (!is_isomorphism(id.matrix, sum.parts[id.from], sum.parts[id.to]))
      throw Error("identification " + std::to_string(id.from + 1) + " -> " + std::to_string(id.to + 1) +
                  " is not an isomorphism");
    const std::size_t keep = d.class_of[id.from], drop = d.class_of[id.to];
    if (keep == drop) continue;
    // Re-root the class of `to` on the representative of `from`.
    const Matrix<Rational> bridge = d.from_class_rep[id.from] * id.matrix * *inverse(d.from_class_rep[id.to]);
    for (std::size_t k = 0; k < r; ++k)
      if (d.class_of[k] == drop) {
        d.class_of[k] = keep;
        d.from_class_rep[k] = bridge * d.from_class_rep[k];
      }
  }
  // Renumber classes densely in order of first appearance.
  std::vector<std::size_t> remap(r + 1, r);
  std::size_t next = 0;
  for (auto& c : d.class_of) {
    if (remap[c] == r) remap[c] = next++;
    c = remap[c];
  }
  d.zeta = zeta_space(sum.total);
  return d;
}

class SingularSynthesis : public Error {
 public:
  SingularSynthesis() : Error("theta + zeta is singular; choose smaller zeta coefficients") {}
};

inline void check_permutation(const SumAutDescriptor& d, const std::vector<std::size_t>& perm) {
  const std::size_t r = d.sum.size();
  if (perm.size() != r) throw Error("permutation has the wrong length");
  std::vector<bool> seen(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (perm[i] >= r || seen[perm[i]]) throw Error("invalid permutation of components");
    seen[perm[i]] = true;
    if (d.class_of[i] != d.class_of[perm[i]])
      throw Error("permutation maps component " + std::to_string(i + 1) + " to a non-isomorphic component " +
                  std::to_string(perm[i] + 1));
  }
}

/// theta + sum_k z_k zeta_k, with theta sending M_i onto M_perm[i] by
/// blocks[i] (an automorphism of M_i) followed by the class identification.
inline GroupElement synthesize_blocks(const SumAutDescriptor& d, const std::vector<GroupElement>& blocks,
                                      const std::vector<std::size_t>& perm, const std::vector<Rational>& zeta_coeffs,
                                      double tolerance = kDefaultTolerance) {
  const std::size_t r = d.sum.size();
  const std::size_t n = d.sum.dim();
  if (blocks.size() != r) throw Error("need one block automorphism per component");
  check_permutation(d, perm);
  if (zeta_coeffs.size() > d.zeta.basis.size()) throw Error("too many zeta coefficients");
  bool exact = std::all_of(blocks.begin(), blocks.end(), [](const GroupElement& g) { return g.is_exact(); });
  Matrix<Rational> zeta(n, n);
  for (std::size_t k = 0; k < zeta_coeffs.size(); ++k) zeta += d.zeta.basis[k] * zeta_coeffs[k];
  if (exact) {
    Matrix<Rational> theta(n, n);
    for (std::size_t i = 0; i < r; ++i)
      theta.set_block(d.sum.offsets[i], d.sum.offsets[perm[i]], *blocks[i].exact * d.identification(i, perm[i]));
    Matrix<Rational> b = theta + zeta;
    if (det(b) == 0) throw SingularSynthesis();
    return GroupElement::from_exact(std::move(b));
  }
  Matrix<double> theta(n, n);
  for (std::size_t i = 0; i < r; ++i)
    theta.set_block(d.sum.offsets[i], d.sum.offsets[perm[i]],
                    blocks[i].numeric * to_numeric(d.identification(i, perm[i])));
  Matrix<double> b = theta + to_numeric(zeta);
  if (std::abs(det(b)) <= tolerance) throw SingularSynthesis();
  return GroupElement::from_numeric(std::move(b));
}

/// Per-component reconstruction, then synthesize_blocks.
inline GroupElement synthesize(const SumAutDescriptor& d, const std::vector<ReconstructionChoice>& choices,
                               const std::vector<std::size_t>& perm, const std::vector<Rational>& zeta_coeffs) {
  if (choices.size() != d.sum.size()) throw Error("need one reconstruction choice per component");
  std::vector<GroupElement> blocks;
  for (std::size_t i = 0; i < choices.size(); ++i) blocks.push_back(reconstruct(d.sum.parts[i], d.parts[i], choices[i]));
  return synthesize_blocks(d, blocks, perm, zeta_coeffs);
}

/// All permutations compatible with the isomorphism classes.
inline std::vector<std::vector<std::size_t>> class_permutations(const SumAutDescriptor& d) {
  const std::size_t r = d.sum.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = d.class_of[i] == d.class_of[perm[i]];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Splitting of a given automorphism B of the sum as theta + zeta.
struct ThetaZeta {
  std::vector<std::size_t> perm;  // M_i goes onto M_perm[i]
  Matrix<Rational> theta;
  Matrix<Rational> zeta;
};

/// Finds the block permutation of B and splits off the central part; nullopt
/// when no permutation gives an automorphism theta and an admissible zeta.
inline std::optional<ThetaZeta> theta_zeta_split(const SumStructure& sum, const Matrix<Rational>& b) {
  const std::size_t r = sum.size();
  const std::size_t n = sum.dim();
  std::vector<std::size_t> perm(r);
  std::vector<bool> used(r, false);
  std::optional<ThetaZeta> found;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (found) return;
    if (i == r) {
      Matrix<Rational> theta(n, n);
      for (std::size_t a = 0; a < r; ++a)
        theta.set_block(sum.offsets[a], sum.offsets[perm[a]],
                        b.block(sum.offsets[a], sum.offsets[perm[a]], sum.part_dim(a), sum.part_dim(perm[a])));
      Matrix<Rational> zeta = b - theta;
      if (in_zeta_space(sum.total, zeta) && is_automorphism(sum.total, theta).ok)
        found = ThetaZeta{perm, std::move(theta), std::move(zeta)};
      return;
    }
    for (std::size_t j = 0; j < r; ++j) {
      if (used[j] || sum.part_dim(i) != sum.part_dim(j)) continue;
      if (rank(b.block(sum.offsets[i], sum.offsets[j], sum.part_dim(i), sum.part_dim(j))) != sum.part_dim(i)) continue;
      used[j] = true;
      perm[i] = j;
      search(i + 1);
      used[j] = false;
    }
  };
  search(0);
  return found;
}

inline Json sum_descriptor_to_json(const SumAutDescriptor& d) {
  Json j;
  Json comps = Json::array();
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    Json c;
    if (d.sum.labels[i]) c["label"] = *d.sum.labels[i];
    c["offset"] = d.sum.offsets[i];
    c["descriptor"] = descriptor_to_json(d.parts[i]);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  Json classes = Json::array();
  for (const auto& cls : d.classes()) {
    Json members = Json::array();
    for (auto i : cls) members.push_back(Json{{"component", i + 1}, {"from_representative", matrix_to_json(d.from_class_rep[i])}});
    classes.push_back(std::move(members));
  }
  j["classes"] = std::move(classes);
  Json zeta = Json::array();
  for (const auto& z : d.zeta.basis) zeta.push_back(matrix_to_json(z));
  j["zeta"] = std::move(zeta);
  return j;
}

}  // namespace liealg
