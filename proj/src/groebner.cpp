#include "pathalg/groebner.hpp"

#include <algorithm>
#include <deque>

namespace pathalg {

TipSet::TipSet(const Quiver& q, std::vector<Path> paths)
    : quiver_(&q), paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
  for (const auto& p : paths_) {
    if (p.length() < 2)
      fail(ErrorCode::kInvalidArgument, "tip set entries need length ≥ 2");
  }
  for (const auto& p : paths_) {
    for (const auto& r : paths_) {
      if (p == r) continue;
      if (is_subpath(p, r))
        fail(ErrorCode::kNotAntichain,
             p.str() + " is a subpath of " + r.str());
    }
  }
}

bool TipSet::contains(const Path& p) const {
  return std::binary_search(paths_.begin(), paths_.end(), p);
}

std::vector<int> TipSet::degrees() const {
  std::set<int> got;
  for (const auto& p : paths_) got.insert(p.length());
  return std::vector<int>(got.begin(), got.end());
}

TipSet TipSet::stratum(int degree) const {
  std::vector<Path> sel;
  for (const auto& p : paths_)
    if (p.length() == degree) sel.push_back(p);
  return TipSet(*quiver_, std::move(sel));
}

GroebnerBasis::GroebnerBasis(const Quiver& q, const Field& f,
                             const AdmissibleOrder& order,
                             std::vector<AlgebraElement> elements,
                             int valid_to_degree, bool complete)
    : quiver_(&q),
      field_(f),
      order_(order),
      elements_(std::move(elements)),
      valid_to_degree_(valid_to_degree),
      complete_(complete) {
  std::sort(elements_.begin(), elements_.end(),
            [&](const AlgebraElement& a, const AlgebraElement& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return order_.less(tip(a, order_).first, tip(b, order_).first);
            });
}

bool GroebnerBasis::is_monomial() const {
  for (const auto& g : elements_)
    if (g.num_terms() != 1) return false;
  return true;
}

namespace {

struct PendingItem {
  AlgebraElement value;
  long long created = 0;
};

// S-element of an overlap tip(f)·r = s·tip(g): f·r − s·g for monic f, g.
AlgebraElement s_element(const AlgebraElement& f, const AlgebraElement& g,
                         const OverlapWitness& w) {
  return f.mul_right(w.r).sub(g.mul_left(w.s));
}

}  // namespace

GroebnerBasis buchberger(const Quiver& quiver, const Field& field,
                         const std::vector<AlgebraElement>& generators,
                         const AdmissibleOrder& order, int max_degree) {
  // Uniform splitting + input validation.
  std::vector<AlgebraElement> inputs;
  for (const auto& gen : generators) {
    if (gen.is_zero()) continue;
    for (auto& comp : gen.uniform_components()) {
      if (!comp.is_homogeneous())
        fail(ErrorCode::kInhomogeneousInput,
             "generator component is not length-homogeneous: " + comp.str());
      if (comp.degree() < 2)
        fail(ErrorCode::kInhomogeneousInput,
             "generator component has degree < 2: " + comp.str());
      inputs.push_back(std::move(comp));
    }
  }

  // degree -> FIFO of pending reductions (inputs, then S-elements).
  std::map<int, std::deque<PendingItem>> queue;
  long long counter = 0;
  bool overflow = false;
  for (auto& x : inputs) {
    int d = x.degree();
    if (d > max_degree) {
      overflow = true;
      continue;
    }
    queue[d].push_back(PendingItem{std::move(x), counter++});
  }

  std::vector<AlgebraElement> basis;
  std::vector<Path> tips;

  auto enqueue_pairs = [&](const AlgebraElement& fresh, const Path& fresh_tip) {
    // Overlaps with every current element, both orders, self included.
    for (size_t j = 0; j < basis.size(); ++j) {
      for (int dir = 0; dir < 2; ++dir) {
        const AlgebraElement& f = dir == 0 ? fresh : basis[j];
        const AlgebraElement& g = dir == 0 ? basis[j] : fresh;
        const Path& ft = dir == 0 ? fresh_tip : tips[j];
        const Path& gt = dir == 0 ? tips[j] : fresh_tip;
        if (dir == 1 && &f == &g) continue;  // self pair handled once
        for (const auto& w : overlaps(ft, gt)) {
          int d = ft.length() + w.r.length();
          if (d > max_degree) {
            // A pair of monomials has an identically zero S-element.
            if (f.num_terms() > 1 || g.num_terms() > 1) overflow = true;
            continue;
          }
          AlgebraElement s = s_element(f, g, w);
          if (!s.is_zero())
            queue[d].push_back(PendingItem{std::move(s), counter++});
        }
      }
    }
  };

  while (!queue.empty()) {
    int level = queue.begin()->first;
    auto& fifo = queue.begin()->second;
    // Adding an element of degree `level` only spawns S-elements of
    // strictly larger degree, so this FIFO never grows while we drain it.
    while (!fifo.empty()) {
      AlgebraElement x = std::move(fifo.front().value);
      fifo.pop_front();
      AlgebraElement nf = reduce(x, basis, order);
      if (nf.is_zero()) continue;
      nf = make_monic(nf, order);
      Path t = tip(nf, order).first;
      // Register first so self-overlaps are included.
      basis.push_back(nf);
      tips.push_back(t);
      enqueue_pairs(basis.back(), tips.back());
    }
    queue.erase(queue.begin());

    // Inter-reduce tails at this level: a later arrival's tip may occur
    // in an earlier same-degree element's tail. Lower degrees are
    // untouched (their support is too short to contain new tips).
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree() != level) continue;
        std::vector<AlgebraElement> others;
        others.reserve(basis.size() - 1);
        for (size_t j = 0; j < basis.size(); ++j)
          if (j != i) others.push_back(basis[j]);
        AlgebraElement nf = reduce(basis[i], others, order);
        if (nf != basis[i]) {
          if (nf.is_zero()) {
            // Duplicate tip cannot arise; tails only shrink.
            fail(ErrorCode::kInternal, "inter-reduction killed a basis element");
          }
          basis[i] = make_monic(nf, order);
          changed = true;
        }
      }
    }
  }

  return GroebnerBasis(quiver, field, order, std::move(basis), max_degree,
                       !overflow);
}

TipSet tip_ideal(const GroebnerBasis& g) {
  std::vector<Path> tips;
  tips.reserve(g.elements().size());
  for (const auto& e : g.elements()) tips.push_back(tip(e, g.order()).first);
  return TipSet(g.quiver(), std::move(tips));
}

std::map<int, std::vector<AlgebraElement>> stratify_by_degree(const GroebnerBasis& g) {
  std::map<int, std::vector<AlgebraElement>> out;
  for (const auto& e : g.elements()) out[e.degree()].push_back(e);
  return out;
}

}  // namespace pathalg
