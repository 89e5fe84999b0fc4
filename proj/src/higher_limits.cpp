#include "djk/higher_limits.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace djk {

Ring Ring::prime_field(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("ring characteristic must be 0 or a prime, got " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument("ring characteristic must be 0 or a prime, got " + std::to_string(p));
  }
  return {p};
}

std::string Ring::name() const { return is_integers() ? "Z" : "F" + std::to_string(characteristic); }

AbGroup::AbGroup(std::size_t rank, std::vector<mpz_class> torsion) : rank_(rank) {
  std::vector<mpz_class> t;
  for (auto& v : torsion) {
    mpz_class a = abs(v);
    if (a == 0) {
      ++rank_;
    } else if (a != 1) {
      t.push_back(std::move(a));
    }
  }
  std::sort(t.begin(), t.end());
  // (a, b) -> (gcd, lcm) leaves t[i] dividing every later entry.
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), t[i].get_mpz_t(), t[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), t[i].get_mpz_t(), t[j].get_mpz_t());
      t[i] = g;
      t[j] = l;
    }
  }
  for (auto& v : t) {
    if (v != 1) torsion_.push_back(std::move(v));
  }
  std::sort(torsion_.begin(), torsion_.end());
}

AbGroup AbGroup::vector_space(Ring ring, std::size_t dimension) {
  if (ring.is_integers()) return free(dimension);
  return AbGroup(0, std::vector<mpz_class>(dimension, mpz_class(static_cast<unsigned long>(ring.characteristic))));
}

AbGroup AbGroup::power(std::size_t copies) const {
  std::vector<mpz_class> t;
  for (std::size_t c = 0; c < copies; ++c) t.insert(t.end(), torsion_.begin(), torsion_.end());
  return AbGroup(rank_ * copies, std::move(t));
}

std::string AbGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (rank_ > 0) s = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (const auto& t : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.get_str();
  }
  return s;
}

AbFunctor::AbFunctor(SimplicialComplex complex, Ring ring, std::map<FaceSet, std::size_t> ranks,
                     std::map<CoverKey, IntMatrix> covers)
    : complex_(std::move(complex)), ring_(ring), objects_(complex_.faces()), covers_(std::move(covers)) {
  if (!ring_.is_integers()) ring_ = Ring::prime_field(ring_.characteristic);
  for (const auto& [face, r] : ranks) {
    if (!complex_.is_face(face)) throw std::invalid_argument("functor value on " + face.to_string() + ", which is not a face");
    if (r > 0) ranks_.emplace(face, r);
  }
  for (auto it = covers_.begin(); it != covers_.end();) {
    auto& [key, mat] = *it;
    const auto [beta, alpha] = key;
    if (!complex_.is_face(beta) || !alpha.is_subset_of(beta) || beta.size() != alpha.size() + 1) {
      throw std::invalid_argument("functor map " + beta.to_string() + " -> " + alpha.to_string() +
                                  " is not a covering pair of faces");
    }
    if (mat.rows() != value_rank(alpha) || mat.cols() != value_rank(beta)) {
      throw std::invalid_argument("functor map " + beta.to_string() + " -> " + alpha.to_string() + " has shape " +
                                  std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) + ", expected " +
                                  std::to_string(value_rank(alpha)) + "x" + std::to_string(value_rank(beta)));
    }
    reduce_entries(mat);
    if (mat.is_zero()) {
      it = covers_.erase(it);
    } else {
      ++it;
    }
  }
  // Covering squares γ -> γ\u -> γ\{u,v} and γ -> γ\v -> γ\{u,v} must agree.
  for (FaceSet gamma : objects_) {
    const auto vs = gamma.vertices();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const FaceSet bottom = gamma.without(vs[a]).without(vs[b]);
        IntMatrix left = cover(gamma.without(vs[a]), bottom) * cover(gamma, gamma.without(vs[a]));
        IntMatrix right = cover(gamma.without(vs[b]), bottom) * cover(gamma, gamma.without(vs[b]));
        reduce_entries(left);
        reduce_entries(right);
        if (!(left == right)) {
          throw std::invalid_argument("functor is not functorial on the square from " + gamma.to_string() + " to " +
                                      bottom.to_string());
        }
      }
    }
  }
}

void AbFunctor::reduce_entries(IntMatrix& a) const {
  if (ring_.is_integers()) return;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (auto& v : a.row(i)) mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), ring_.characteristic);
  }
}

std::size_t AbFunctor::value_rank(FaceSet face) const {
  auto it = ranks_.find(face);
  return it == ranks_.end() ? 0 : it->second;
}

IntMatrix AbFunctor::cover(FaceSet beta, FaceSet alpha) const {
  auto it = covers_.find({beta, alpha});
  if (it != covers_.end()) return it->second;
  return IntMatrix(value_rank(alpha), value_rank(beta));
}

IntMatrix AbFunctor::map(FaceSet beta, FaceSet alpha) const {
  if (!alpha.is_subset_of(beta)) throw std::invalid_argument("no arrow " + beta.to_string() + " -> " + alpha.to_string());
  IntMatrix acc = identity_matrix(value_rank(beta));
  FaceSet current = beta;
  for (int v : (beta - alpha).vertices()) {
    const FaceSet next = current.without(v);
    acc = cover(current, next) * acc;
    reduce_entries(acc);
    current = next;
  }
  return acc;
}

AbFunctor atomic_functor(const SimplicialComplex& complex, FaceSet alpha, std::size_t rank, Ring ring) {
  if (!complex.is_face(alpha)) throw std::invalid_argument("atomic functor: " + alpha.to_string() + " is not a face");
  return AbFunctor(complex, ring, {{alpha, rank}}, {});
}

AbFunctor atomic_functor(const SimplicialComplex& complex, FaceSet alpha, const AbGroup& value) {
  if (!value.torsion().empty()) throw std::invalid_argument("atomic functor: value group must be free");
  return atomic_functor(complex, alpha, value.rank(), Ring::integers());
}

AbFunctor constant_functor(const SimplicialComplex& complex, std::size_t rank, Ring ring) {
  std::map<FaceSet, std::size_t> ranks;
  std::map<AbFunctor::CoverKey, IntMatrix> covers;
  for (FaceSet beta : complex.faces()) {
    ranks.emplace(beta, rank);
    for (int v : beta.vertices()) covers.emplace(AbFunctor::CoverKey{beta, beta.without(v)}, identity_matrix(rank));
  }
  return AbFunctor(complex, ring, std::move(ranks), std::move(covers));
}

namespace {

template <typename Keep>
AbFunctor filter_functor(const AbFunctor& phi, Keep keep) {
  std::map<FaceSet, std::size_t> ranks;
  for (const auto& [face, r] : phi.ranks()) {
    if (keep(face)) ranks.emplace(face, r);
  }
  std::map<AbFunctor::CoverKey, IntMatrix> covers;
  for (const auto& [key, mat] : phi.covers()) {
    if (keep(key.first) && keep(key.second)) covers.emplace(key, mat);
  }
  return AbFunctor(phi.complex(), phi.ring(), std::move(ranks), std::move(covers));
}

}  // namespace

AbFunctor truncate_below(const AbFunctor& phi, int s) {
  if (s < 0) throw std::invalid_argument("truncate_below: s must be non-negative");
  return filter_functor(phi, [s](FaceSet f) { return f.size() <= s; });
}

AbFunctor slice(const AbFunctor& phi, int s) {
  if (s < 0) throw std::invalid_argument("slice: s must be non-negative");
  return filter_functor(phi, [s](FaceSet f) { return f.size() == s; });
}

CochainComplex nerve_cochains(const AbFunctor& phi) {
  const auto& objects = phi.objects();
  const std::size_t count = objects.size();
  std::unordered_map<FaceSet, std::uint32_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(objects[i], static_cast<std::uint32_t>(i));
  std::vector<std::vector<std::uint32_t>> above(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && objects[i].is_subset_of(objects[j])) above[i].push_back(static_cast<std::uint32_t>(j));
    }
  }

  // chains[k] holds the strict chains β_0 ⊋ ... ⊋ β_k ending in a face with
  // nonzero value, largest face first.
  using Chain = std::vector<std::uint32_t>;
  std::vector<std::vector<Chain>> chains;
  std::vector<std::map<Chain, std::size_t>> offsets;
  std::vector<std::size_t> dims;
  auto record = [&](const Chain& largest_last) {
    const std::size_t k = largest_last.size() - 1;
    if (chains.size() <= k) {
      chains.resize(k + 1);
      offsets.resize(k + 1);
      dims.resize(k + 1, 0);
    }
    Chain c(largest_last.rbegin(), largest_last.rend());
    offsets[k].emplace(c, dims[k]);
    dims[k] += phi.value_rank(objects[largest_last.front()]);
    chains[k].push_back(std::move(c));
  };
  std::function<void(Chain&)> grow = [&](Chain& partial) {
    record(partial);
    for (std::uint32_t next : above[partial.back()]) {
      partial.push_back(next);
      grow(partial);
      partial.pop_back();
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    if (phi.value_rank(objects[i]) == 0) continue;
    Chain start{static_cast<std::uint32_t>(i)};
    grow(start);
  }

  CochainComplex out;
  out.dims = dims;
  if (dims.empty()) return out;

  std::map<std::pair<std::uint32_t, std::uint32_t>, IntMatrix> map_cache;
  auto arrow = [&](std::uint32_t from, std::uint32_t to) -> const IntMatrix& {
    auto it = map_cache.find({from, to});
    if (it == map_cache.end()) it = map_cache.emplace(std::make_pair(from, to), phi.map(objects[from], objects[to])).first;
    return it->second;
  };

  for (std::size_t k = 1; k < dims.size(); ++k) {
    SparseIntMatrix d(dims[k], dims[k - 1]);
    for (const Chain& sigma : chains[k]) {
      const std::size_t row0 = offsets[k].at(sigma);
      const std::size_t r = phi.value_rank(objects[sigma.back()]);
      for (std::size_t j = 0; j <= k; ++j) {
        const mpz_class sign = (j % 2 == 0) ? 1 : -1;
        Chain tau = sigma;
        tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(j));
        if (j < k) {
          const std::size_t col0 = offsets[k - 1].at(tau);
          for (std::size_t a = 0; a < r; ++a) d.add(row0 + a, col0 + a, sign);
        } else {
          const std::size_t rprev = phi.value_rank(objects[tau.back()]);
          if (rprev == 0) continue;
          const std::size_t col0 = offsets[k - 1].at(tau);
          const IntMatrix& mat = arrow(sigma[k - 1], sigma[k]);
          for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < rprev; ++b) {
              if (mat(a, b) != 0) d.add(row0 + a, col0 + b, sign * mat(a, b));
            }
          }
        }
      }
    }
    out.coboundaries.push_back(std::move(d));
  }
  out.coboundaries.emplace_back(0, dims.back());
  return out;
}

std::vector<AbGroup> cohomology(const CochainComplex& complex, Ring ring, std::size_t count) {
  const std::size_t len = complex.dims.size();
  std::vector<IntegerInvariants> inv(len);
  for (std::size_t k = 0; k < len; ++k) {
    const SparseIntMatrix& d = complex.coboundaries[k];
    if (ring.is_integers()) {
      inv[k] = integer_invariants(d);
    } else {
      inv[k].rank = rank_mod_p(d, ring.characteristic);
    }
  }
  std::vector<AbGroup> out;
  for (std::size_t k = 0; k < count; ++k) {
    if (k >= len) {
      out.emplace_back();
      continue;
    }
    const std::size_t out_rank = inv[k].rank;
    const std::size_t in_rank = k > 0 ? inv[k - 1].rank : 0;
    const std::size_t free_part = complex.dims[k] - out_rank - in_rank;
    if (ring.is_integers()) {
      out.emplace_back(free_part, k > 0 ? inv[k - 1].torsion : std::vector<mpz_class>{});
    } else {
      out.push_back(AbGroup::vector_space(ring, free_part));
    }
  }
  return out;
}

std::vector<AbGroup> lim_groups(const AbFunctor& phi, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("lim_groups: max_degree must be non-negative");
  return cohomology(nerve_cochains(phi), phi.ring(), static_cast<std::size_t>(max_degree) + 1);
}

std::vector<AbGroup> link_cohomology(const SimplicialComplex& complex, FaceSet alpha, Ring ring,
                                     std::size_t coefficient_rank) {
  const SimplicialComplex link = complex.link(alpha);
  // cochains[j] = simplices of the link with j vertices, i.e. degree j - 1.
  std::vector<std::vector<FaceSet>> simplices;
  for (int j = 0; j <= link.n(); ++j) simplices.push_back(link.faces_of_card(j));

  CochainComplex cochains;
  cochains.first_degree = -1;
  for (const auto& layer : simplices) cochains.dims.push_back(layer.size());
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    if (j + 1 == simplices.size()) {
      cochains.coboundaries.emplace_back(0, simplices[j].size());
      break;
    }
    std::unordered_map<FaceSet, std::size_t> pos;
    for (std::size_t c = 0; c < simplices[j].size(); ++c) pos.emplace(simplices[j][c], c);
    SparseIntMatrix d(simplices[j + 1].size(), simplices[j].size());
    for (std::size_t r = 0; r < simplices[j + 1].size(); ++r) {
      const FaceSet sigma = simplices[j + 1][r];
      const auto vs = sigma.vertices();
      for (std::size_t i = 0; i < vs.size(); ++i) d.add(r, pos.at(sigma.without(vs[i])), i % 2 == 0 ? 1 : -1);
    }
    cochains.coboundaries.push_back(std::move(d));
  }

  const int top = complex.n() - alpha.size() - 1;
  auto groups = cohomology(cochains, ring, static_cast<std::size_t>(top + 2));
  for (auto& g : groups) g = g.power(coefficient_rank);
  return groups;
}

bool verify_atomic_formula(const SimplicialComplex& complex, FaceSet alpha, Ring ring, int max_degree,
                           std::size_t coefficient_rank) {
  const auto lim = lim_groups(atomic_functor(complex, alpha, coefficient_rank, ring), max_degree);
  const auto link = link_cohomology(complex, alpha, ring, coefficient_rank);
  for (int i = 0; i <= max_degree; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);  // degree i - 1 of the link
    const AbGroup expected = idx < link.size() ? link[idx] : AbGroup{};
    if (!(lim[idx] == expected)) return false;
  }
  return true;
}

}  // namespace djk
