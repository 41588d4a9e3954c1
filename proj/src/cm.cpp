#include "admcm/cm.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_set>

#include "admcm/errors.hpp"

namespace admcm {

const char* to_string(CMStatus s) noexcept {
  switch (s) {
    case CMStatus::CM: return "CM";
    case CMStatus::NotCM: return "NotCM";
    case CMStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(LinearStatus s) noexcept {
  switch (s) {
    case LinearStatus::Linear: return "Linear";
    case LinearStatus::NotLinear: return "NotLinear";
    case LinearStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

enum class FaceResult { Clean, Witness, TooLarge };

// Tests H~_i(lk F) = 0 for i < dim lk F. Links of dimension <= 0 always pass:
// H~_{-1} only lives on {∅}.
FaceResult check_face(const SimplicialComplex& complex, VertexSet face, const PrimeField& field,
                      std::size_t link_budget, int& index) {
  const SimplicialComplex lk = link(complex, face);
  const int dim = lk.dimension();
  if (dim <= 0) return FaceResult::Clean;
  if (!is_connected(lk)) {
    index = 0;
    return FaceResult::Witness;
  }
  if (dim == 1) return FaceResult::Clean;
  if (lk.count_faces(link_budget) > link_budget) return FaceResult::TooLarge;
  const HomologyProfile h = reduced_homology(lk, field, link_budget);
  for (int i = 1; i < dim; ++i)
    if (h.at(i) != 0) {
      index = i;
      return FaceResult::Witness;
    }
  return FaceResult::Clean;
}

// Phase 0 screens every link for connectivity, phase 1 computes the rest of
// the homology. Within a phase the lowest witness in face order wins.
CMVerdict exhaustive(const SimplicialComplex& complex, const std::vector<VertexSet>& faces, const PrimeField& field,
                     const CMOptions& opt) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  CMVerdict v;
  v.characteristic = field.characteristic();
  v.exhaustive = true;
  v.faces_checked = faces.size();

  for (int phase = 0; phase < 2; ++phase) {
    std::atomic<std::size_t> best{kNone};
    std::vector<int> index_at(faces.size(), 0);
    auto worker = [&](std::size_t start, std::size_t stride) {
      for (std::size_t k = start; k < faces.size(); k += stride) {
        if (k > best.load(std::memory_order_relaxed)) return;
        int idx = 0;
        bool hit = false;
        if (phase == 0) {
          const SimplicialComplex lk = link(complex, faces[k]);
          hit = lk.dimension() > 0 && !is_connected(lk);
        } else {
          hit = check_face(complex, faces[k], field, opt.face_budget, idx) == FaceResult::Witness;
        }
        if (hit) {
          index_at[k] = idx;
          std::size_t cur = best.load();
          while (k < cur && !best.compare_exchange_weak(cur, k)) {
          }
          return;
        }
      }
    };
    const unsigned threads = std::max(1u, opt.threads);
    if (threads == 1) {
      worker(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
      for (auto& th : pool) th.join();
    }
    if (best.load() != kNone) {
      v.status = CMStatus::NotCM;
      v.witness_face = faces[best.load()];
      v.homology_index = index_at[best.load()];
      return v;
    }
  }
  v.status = CMStatus::CM;
  return v;
}

// Faces f - R for facets f and |R| = codim.
void faces_at_codim(const std::vector<VertexSet>& facets, int codim, std::vector<VertexSet>& out) {
  for (VertexSet f : facets) {
    const std::vector<int> members = f.indices();
    const int m = static_cast<int>(members.size());
    if (codim > m) continue;
    if (codim == 0) {
      out.push_back(f);
      continue;
    }
    // Gosper over positions
    std::uint64_t pick = (std::uint64_t{1} << codim) - 1;
    const std::uint64_t limit = m >= 64 ? 0 : (std::uint64_t{1} << m);
    while (pick < limit) {
      VertexSet face = f;
      for (int pos : VertexSet(pick)) face.erase(members[static_cast<std::size_t>(pos)]);
      out.push_back(face);
      const std::uint64_t c = pick & (~pick + 1);
      const std::uint64_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
    }
  }
}

CMVerdict witness_search(const SimplicialComplex& complex, const PrimeField& field, const CMOptions& opt) {
  CMVerdict v;
  v.characteristic = field.characteristic();
  std::unordered_set<std::uint64_t> visited;
  std::size_t skipped = 0;
  for (int codim = 0; codim <= complex.dimension() + 1; ++codim) {
    std::vector<VertexSet> level;
    faces_at_codim(complex.facets(), codim, level);
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    for (VertexSet f : level) {
      if (!visited.insert(f.bits()).second) continue;
      if (visited.size() > opt.face_budget) {
        v.faces_checked = visited.size() - 1;
        v.note = "face budget " + std::to_string(opt.face_budget) + " reached at codimension " +
                 std::to_string(codim) + "; no witness found";
        return v;
      }
      int idx = 0;
      switch (check_face(complex, f, field, opt.link_face_budget, idx)) {
        case FaceResult::Witness:
          v.status = CMStatus::NotCM;
          v.witness_face = f;
          v.homology_index = idx;
          v.faces_checked = visited.size();
          return v;
        case FaceResult::TooLarge: ++skipped; break;
        case FaceResult::Clean: break;
      }
    }
  }
  v.faces_checked = visited.size();
  v.note = "witness search found no witness (" + std::to_string(skipped) + " links over the link budget)";
  return v;
}

}  // namespace

CMVerdict reisner_check(const SimplicialComplex& complex, const PrimeField& field, const CMOptions& options) {
  if (complex.is_void()) throw InputError("Reisner criterion on the void complex");
  if (!options.witness_only && complex.count_faces(options.face_budget) <= options.face_budget)
    return exhaustive(complex, complex.faces(options.face_budget), field, options);
  CMVerdict v = witness_search(complex, field, options);
  if (v.status == CMStatus::Inconclusive && !options.witness_only)
    v.note = "complex exceeds face budget " + std::to_string(options.face_budget) + "; " + v.note;
  return v;
}

CMVerdict is_cohen_macaulay(const Clutter& clutter, const PrimeField& field, const CMOptions& options) {
  return reisner_check(independence_complex(clutter, options.covers), field, options);
}

bool reverify_witness(const SimplicialComplex& complex, VertexSet face, int index, const PrimeField& field) {
  if (!complex.is_face(face)) return false;
  const SimplicialComplex lk = link(complex, face);
  if (index >= lk.dimension()) return false;
  return reduced_homology(lk, field, std::size_t{1} << 24).at(index) != 0;
}

std::vector<VertexSet> restricted_faces(const SquareFreeIdeal& ideal, VertexSet sigma) {
  std::vector<VertexSet> inside;
  for (VertexSet g : ideal.generators())
    if (g.subset_of(sigma)) inside.push_back(g);
  std::vector<VertexSet> out;
  for_each_subset(sigma, [&](VertexSet s) {
    for (VertexSet g : inside)
      if (g.subset_of(s)) return;
    out.push_back(s);
  });
  return out;
}

namespace {

bool is_union_of_generators(const SquareFreeIdeal& ideal, VertexSet sigma) {
  VertexSet u;
  for (VertexSet g : ideal.generators())
    if (g.subset_of(sigma)) u |= g;
  return u == sigma;
}

// Calls f(sigma) for all subsets of {0..n-1} by increasing size, then
// canonically; stops when f returns false.
template <typename F>
void for_each_set_by_size(int n, F&& f) {
  for (int s = 0; s <= n; ++s) {
    if (s == 0) {
      if (!f(VertexSet())) return;
      continue;
    }
    // Gosper's hack yields increasing masks, which is not canonical order, so
    // collect each size first.
    std::vector<VertexSet> level;
    std::uint64_t pick = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = n >= 64 ? 0 : (std::uint64_t{1} << n);
    while (pick < limit) {
      level.emplace_back(pick);
      const std::uint64_t c = pick & (~pick + 1);
      const std::uint64_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
      if (s == 64) break;
    }
    std::sort(level.begin(), level.end());
    for (VertexSet sigma : level)
      if (!f(sigma)) return;
  }
}

}  // namespace

BettiTable betti_numbers(const SquareFreeIdeal& ideal, const PrimeField& field,
                         const std::optional<std::vector<VertexSet>>& restriction, std::size_t budget) {
  BettiTable table;
  std::size_t work = 0;
  auto visit = [&](VertexSet sigma) {
    if (sigma.empty() || !is_union_of_generators(ideal, sigma)) return true;
    work += std::size_t{1} << sigma.size();
    if (!restriction && work > budget) throw ResourceError("betti", budget);
    const HomologyProfile h = homology_of_faces(restricted_faces(ideal, sigma), field);
    for (std::size_t t = 0; t < h.dims.size(); ++t) {
      if (h.dims[t] == 0) continue;
      const int k = static_cast<int>(t) - 1;
      const int i = sigma.size() - k - 2;
      if (i < 0) continue;
      table.fine[{i, sigma}] += h.dims[t];
      table.coarse[{i, sigma.size()}] += h.dims[t];
    }
    return true;
  };
  if (restriction) {
    std::vector<VertexSet> sigmas = *restriction;
    std::sort(sigmas.begin(), sigmas.end());
    sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());
    for (VertexSet s : sigmas) {
      if (!s.subset_of(VertexSet::range(ideal.ambient_size()))) throw InputError("restriction leaves the ground set");
      visit(s);
    }
  } else {
    for_each_set_by_size(ideal.ambient_size(), visit);
  }
  return table;
}

LinearVerdict has_linear_resolution(const SquareFreeIdeal& ideal, const PrimeField& field, std::size_t budget) {
  const auto q = ideal.degree();
  if (!q) throw InputError("linear resolution is only defined here for equigenerated nonzero ideals");
  LinearVerdict v;
  v.degree = *q;
  v.characteristic = field.characteristic();
  std::size_t work = 0;
  bool over = false;
  for_each_set_by_size(ideal.ambient_size(), [&](VertexSet sigma) {
    ++work;
    if (sigma.size() > *q && is_union_of_generators(ideal, sigma)) work += std::size_t{1} << sigma.size();
    else if (work <= budget) return true;
    if (work > budget) {
      over = true;
      return false;
    }
    const HomologyProfile h = homology_of_faces(restricted_faces(ideal, sigma), field);
    for (std::size_t t = 0; t < h.dims.size(); ++t) {
      const int k = static_cast<int>(t) - 1;
      if (h.dims[t] == 0 || k == *q - 2) continue;
      v.status = LinearStatus::NotLinear;
      v.witness = sigma;
      v.index = sigma.size() - k - 2;
      v.dimension = h.dims[t];
      return false;
    }
    return true;
  });
  if (v.status == LinearStatus::NotLinear) return v;
  if (over) {
    v.note = "subset budget " + std::to_string(budget) + " exhausted; no off-strand sigma found";
    return v;
  }
  v.status = LinearStatus::Linear;
  return v;
}

}  // namespace admcm
