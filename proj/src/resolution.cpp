#include "pathalg/resolution.hpp"

#include <algorithm>

namespace pathalg {

NormalBasis::NormalBasis(const Quiver& q, const TipSet& tips, int max_degree)
    : quiver_(&q), max_degree_(max_degree) {
  if (max_degree < 0) fail(ErrorCode::kInvalidArgument, "max_degree must be ≥ 0");
  int V = q.num_vertices();
  table_.assign(max_degree + 1, std::vector<std::vector<Path>>(V * V));
  for (int v = 0; v < V; ++v)
    table_[0][v * V + v].push_back(Path::vertex(q, v));

  for (int len = 1; len <= max_degree; ++len) {
    bool any = false;
    for (int src = 0; src < V; ++src) {
      for (int mid = 0; mid < V; ++mid) {
        const auto& stems = table_[len - 1][src * V + mid];
        if (stems.empty()) continue;
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (q.arrow(a).source != mid) continue;
          int tgt = q.arrow(a).target;
          for (const Path& w : stems) {
            std::vector<int> arrows = w.arrows();
            arrows.push_back(a);
            // A fresh tip occurrence must end at the new last arrow.
            bool normal = true;
            for (const Path& t : tips.paths()) {
              int m = t.length();
              if (m > len) continue;
              bool suffix = true;
              for (int i = 0; i < m; ++i) {
                if (arrows[len - m + i] != t.arrow_at(i)) {
                  suffix = false;
                  break;
                }
              }
              if (suffix) {
                normal = false;
                break;
              }
            }
            if (normal) {
              table_[len][src * V + tgt].push_back(
                  Path::of_arrows(q, std::move(arrows)));
              any = true;
            }
          }
        }
      }
    }
    for (auto& bucket : table_[len]) std::sort(bucket.begin(), bucket.end());
    if (!any && !first_empty_) first_empty_ = len;
  }
}

const std::vector<Path>& NormalBasis::words(int length, int source, int target) const {
  if (length < 0 || length > max_degree_) return empty_;
  int V = quiver_->num_vertices();
  return table_[length][source * V + target];
}

std::vector<Path> NormalBasis::words_of_length(int length) const {
  std::vector<Path> out;
  if (length < 0 || length > max_degree_) return out;
  for (const auto& bucket : table_[length])
    out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end());
  return out;
}

NormalBasis normal_words(const Quiver& q, const TipSet& tips, int max_degree) {
  return NormalBasis(q, tips, max_degree);
}

GroebnerBasis monomial_basis(const Quiver& q, const TipSet& tips, const Field& f) {
  AdmissibleOrder order(q, AdmissibleOrder::Kind::kDeglex);
  std::vector<AlgebraElement> elems;
  int top = 2;
  for (const Path& t : tips.paths()) {
    elems.push_back(AlgebraElement::term(q, f, t, Scalar::one(f)));
    top = std::max(top, t.length());
  }
  return GroebnerBasis(q, f, order, std::move(elems), top, /*complete=*/true);
}

namespace {

// Sparse vectors keyed by coordinate rank; begin() is the leading entry.
using SparseVec = std::map<int, Scalar>;

void axpy(const Field& f, SparseVec& y, const Scalar& c, const SparseVec& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      Scalar nv = c.mul(f, v);
      if (!nv.is_zero()) y.emplace(k, nv);
    } else {
      it->second = it->second.add(f, c.mul(f, v));
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void add_at(const Field& f, SparseVec& y, int key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = y.find(key);
  if (it == y.end()) {
    y.emplace(key, c);
  } else {
    it->second = it->second.add(f, c);
    if (it->second.is_zero()) y.erase(it);
  }
}

struct AugVec {
  SparseVec v;
  SparseVec aug;
};

// Incremental Gaussian elimination over an exact field. Pivot vectors are
// kept as registered; reduction eliminates the leading coordinate of a
// candidate against them, lockstep on the augmentation.
class GaussContext {
 public:
  explicit GaussContext(const Field& f) : field_(f) {}

  void reduce_inplace(AugVec& x) const {
    while (!x.v.empty()) {
      auto it = pivots_.find(x.v.begin()->first);
      if (it == pivots_.end()) return;
      Scalar factor =
          x.v.begin()->second.div(field_, it->second.v.begin()->second).neg(field_);
      axpy(field_, x.v, factor, it->second.v);
      axpy(field_, x.aug, factor, it->second.aug);
    }
  }

  void add_pivot(AugVec x) {
    if (x.v.empty()) fail(ErrorCode::kInternal, "zero pivot");
    pivots_.emplace(x.v.begin()->first, std::move(x));
  }

 private:
  Field field_;
  std::map<int, AugVec> pivots_;
};

// One graded component ⊕_g (normal words)·g as an indexed coordinate
// space: coordinates (gen index, normal word), with a rank permutation
// that puts the order-largest word first (ties by generator index).
class CoordSpace {
 public:
  CoordSpace(const NormalBasis& basis, const AdmissibleOrder& order,
             const std::vector<OracleGen>& gens, int degree, int source) {
    bucket_of_gen_.assign(gens.size(), -1);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      int len = degree - gens[g].degree;
      if (len < 0) continue;
      const auto& bucket = basis.words(len, source, gens[g].vertex);
      if (bucket.empty()) continue;
      bucket_of_gen_[g] = static_cast<int>(buckets_.size());
      bucket_starts_.push_back(total_);
      buckets_.push_back(&bucket);
      bucket_gen_.push_back(g);
      total_ += static_cast<int>(bucket.size());
    }
    // rank: admissible order descending on the word, then gen ascending.
    std::vector<int> ids(total_);
    for (int i = 0; i < total_; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      auto [ga, wa] = locate(a);
      auto [gb, wb] = locate(b);
      Ordering c = order.compare(*wa, *wb);
      if (c != Ordering::kEqual) return c == Ordering::kGreater;
      return ga < gb;
    });
    rank_.assign(total_, 0);
    for (int pos = 0; pos < total_; ++pos) rank_[ids[pos]] = pos;
    by_rank_ = std::move(ids);
  }

  int total() const { return total_; }

  std::pair<int, const Path*> locate(int id) const {
    int b = static_cast<int>(std::upper_bound(bucket_starts_.begin(),
                                              bucket_starts_.end(), id) -
                             bucket_starts_.begin()) -
            1;
    const auto& bucket = *buckets_[b];
    return {bucket_gen_[b], &bucket[id - bucket_starts_[b]]};
  }

  std::pair<int, const Path*> locate_by_rank(int rank) const {
    return locate(by_rank_[rank]);
  }

  int rank_of(int id) const { return rank_[id]; }

  // Coordinate id of (gen, word-as-arrows); the word must be normal.
  int id_of(int gen, const std::vector<int>& arrows, int base_vertex) const {
    int b = bucket_of_gen_[gen];
    if (b < 0) fail(ErrorCode::kInternal, "coordinate bucket missing");
    const auto& bucket = *buckets_[b];
    auto cmp = [](const Path& p, const std::pair<const std::vector<int>*, int>& k) {
      int plen = p.length(), klen = static_cast<int>(k.first->size());
      if (plen != klen) return plen < klen;
      if (plen == 0) return p.source() < k.second;
      return p.arrows() < *k.first;
    };
    auto it = std::lower_bound(bucket.begin(), bucket.end(),
                               std::make_pair(&arrows, base_vertex), cmp);
    if (it == bucket.end())
      fail(ErrorCode::kInternal, "coordinate word missing from bucket");
    return bucket_starts_[b] + static_cast<int>(it - bucket.begin());
  }

 private:
  std::vector<const std::vector<Path>*> buckets_;
  std::vector<int> bucket_gen_;
  std::vector<int> bucket_of_gen_;
  std::vector<int> bucket_starts_;
  std::vector<int> rank_;
  std::vector<int> by_rank_;
  int total_ = 0;
};

// Multiplication in the quotient: u·w as sparse row contributions.
class QuotientMul {
 public:
  QuotientMul(const Quiver& q, const GroebnerBasis& gb, const TipSet& tips)
      : quiver_(q), gb_(gb), monomial_(gb.is_monomial()) {
    for (const Path& t : tips.paths()) tips_.push_back(t.arrows());
  }

  bool monomial() const { return monomial_; }

  // Monomial case: the concatenation is either normal or zero, and any
  // obstruction occurrence must straddle the boundary.
  bool mono_product(const Path& u, const Path& w, std::vector<int>& out) const {
    out.clear();
    out.reserve(u.length() + w.length());
    out.insert(out.end(), u.arrows().begin(), u.arrows().end());
    out.insert(out.end(), w.arrows().begin(), w.arrows().end());
    int ulen = u.length(), n = static_cast<int>(out.size());
    for (const auto& t : tips_) {
      int m = static_cast<int>(t.size());
      int lo = std::max(0, ulen - m + 1);
      int hi = std::min(ulen - 1, n - m);
      for (int off = lo; off <= hi; ++off) {
        bool hit = true;
        for (int i = 0; i < m; ++i) {
          if (out[off + i] != t[i]) {
            hit = false;
            break;
          }
        }
        if (hit) return false;
      }
    }
    return true;
  }

  AlgebraElement general_product(const Path& u, const Path& w) const {
    Path prod = compose(u, w);
    return reduce(
        AlgebraElement::term(quiver_, gb_.field(), prod, Scalar::one(gb_.field())),
        gb_.elements(), gb_.order());
  }

 private:
  const Quiver& quiver_;
  const GroebnerBasis& gb_;
  bool monomial_;
  std::vector<std::vector<int>> tips_;
};

}  // namespace

OracleResolution oracle_resolution_full(const Quiver& q, const GroebnerBasis& gb,
                                        int max_n, int max_degree) {
  if (max_n < 0 || max_degree < 0)
    fail(ErrorCode::kInvalidArgument, "bounds must be ≥ 0");
  if (!gb.complete() && gb.valid_to_degree() < max_degree)
    fail(ErrorCode::kIncompleteBasis,
         "basis valid to degree " + std::to_string(gb.valid_to_degree()) +
             " but the resolution needs degree " + std::to_string(max_degree));

  const Field& field = gb.field();
  const AdmissibleOrder& order = gb.order();
  TipSet tips = tip_ideal(gb);
  NormalBasis basis(q, tips, max_degree);
  QuotientMul mul(q, gb, tips);
  int V = q.num_vertices();

  OracleResolution res;
  res.table.method = "oracle";
  res.table.degree_cap = max_degree;

  // Level 0: one generator per vertex, in degree 0.
  res.levels.emplace_back();
  for (int v = 0; v < V; ++v) res.levels[0].push_back(OracleGen{v, 0, {}});
  {
    BettiRow row;
    row.n = 0;
    for (int v = 0; v < V; ++v) row.entries[{v, 0}]++;
    res.table.rows.push_back(std::move(row));
  }
  if (max_n == 0) return res;

  // Level 1: the radical is generated by the arrows.
  res.levels.emplace_back();
  for (int a = 0; a < q.num_arrows(); ++a) {
    OracleGen g;
    g.vertex = q.arrow(a).source;
    g.degree = 1;
    g.element.push_back(OracleGen::Coord{q.arrow(a).target,
                                         Path::of_arrows(q, {a}),
                                         Scalar::one(field)});
    res.levels[1].push_back(std::move(g));
  }
  {
    BettiRow row;
    row.n = 1;
    for (int a = 0; a < q.num_arrows(); ++a) row.entries[{q.arrow(a).source, 1}]++;
    res.table.rows.push_back(std::move(row));
  }

  std::optional<int> top_len;
  if (basis.first_empty_length()) top_len = *basis.first_empty_length() - 1;

  std::vector<int> scratch;

  // Expands x·(coordinate vector of gen z) into the given coordinate
  // space; the space's generators are `space_gens`.
  auto expand = [&](const OracleGen& z, const Path& x, const CoordSpace& space,
                    SparseVec& out) {
    for (const auto& coord : z.element) {
      if (mul.monomial()) {
        if (!mul.mono_product(x, coord.word, scratch)) continue;
        int id = space.id_of(coord.prev, scratch, -1);
        add_at(field, out, space.rank_of(id), coord.coeff);
      } else {
        AlgebraElement prod = mul.general_product(x, coord.word);
        for (const auto& [m, a] : prod.terms()) {
          int id = space.id_of(coord.prev, m.arrows(), m.source());
          add_at(field, out, space.rank_of(id), coord.coeff.mul(field, a));
        }
      }
    }
  };

  for (int n = 1; n < max_n; ++n) {
    const auto& cur = res.levels[n];
    const auto& prev = res.levels[n - 1];
    std::vector<OracleGen> next;

    if (!cur.empty()) {
      int min_deg = cur.front().degree;
      for (const auto& g : cur) min_deg = std::min(min_deg, g.degree);

      for (int k = min_deg; k <= max_degree; ++k) {
        for (int v = 0; v < V; ++v) {
          CoordSpace cols(basis, order, cur, k, v);
          if (cols.total() == 0) continue;
          CoordSpace rows(basis, order, prev, k, v);

          // Kernel of the block.
          GaussContext ker(field);
          std::vector<SparseVec> kernel;
          for (int pos = 0; pos < cols.total(); ++pos) {
            auto [i, u] = cols.locate_by_rank(pos);
            AugVec x;
            x.aug[pos] = Scalar::one(field);
            expand(cur[i], *u, rows, x.v);
            ker.reduce_inplace(x);
            if (x.v.empty())
              kernel.push_back(std::move(x.aug));
            else
              ker.add_pivot(std::move(x));
          }
          if (kernel.empty()) continue;

          // Quotient by the radical times earlier new generators.
          GaussContext ext(field);
          for (const auto& z : next) {
            if (z.degree >= k) continue;
            for (const Path& x : basis.words(k - z.degree, v, z.vertex)) {
              AugVec span;
              expand(z, x, cols, span.v);
              ext.reduce_inplace(span);
              if (!span.v.empty()) ext.add_pivot(std::move(span));
            }
          }
          for (const SparseVec& kv : kernel) {
            AugVec cand;
            cand.v = kv;
            ext.reduce_inplace(cand);
            if (cand.v.empty()) continue;
            ext.add_pivot(cand);
            OracleGen g;
            g.vertex = v;
            g.degree = k;
            for (const auto& [pos, s] : kv) {
              auto [i, u] = cols.locate_by_rank(pos);
              g.element.push_back(OracleGen::Coord{i, *u, s});
            }
            next.push_back(std::move(g));
          }
        }
      }
    }

    BettiRow row;
    row.n = n + 1;
    for (const auto& g : next) row.entries[{g.vertex, g.degree}]++;
    if (cur.empty()) {
      row.truncated = false;
    } else if (top_len) {
      int dmax = 0;
      for (const auto& g : cur) dmax = std::max(dmax, g.degree);
      row.truncated = dmax + *top_len > max_degree;
    } else {
      row.truncated = true;
    }
    res.table.rows.push_back(std::move(row));
    res.levels.push_back(std::move(next));
  }
  return res;
}

BettiTable oracle_resolution(const Quiver& q, const GroebnerBasis& gb, int max_n,
                             int max_degree) {
  return oracle_resolution_full(q, gb, max_n, max_degree).table;
}

BettiTable oracle_resolution(const Quiver& q, const TipSet& tips, const Field& f,
                             int max_n, int max_degree) {
  return oracle_resolution(q, monomial_basis(q, tips, f), max_n, max_degree);
}

std::vector<std::vector<DifferentialEntry>> monomial_differential(
    const ChainTable& table) {
  std::vector<std::vector<DifferentialEntry>> out;
  for (int n = 0; n < table.num_levels(); ++n) {
    out.emplace_back();
    for (const auto& c : table.level(n))
      out[n].push_back(DifferentialEntry{c.r, c.parent});
  }
  return out;
}

std::vector<std::pair<int, int>> differential_square_witnesses(
    const ChainTable& table) {
  std::vector<std::pair<int, int>> bad;
  for (int n = 2; n < table.num_levels(); ++n) {
    for (int i = 0; i < static_cast<int>(table.level(n).size()); ++i) {
      const Chain& c = table.level(n)[i];
      const Chain& parent = table.level(n - 1)[c.parent];
      Path rr = compose(c.r, parent.r);
      bool vanishes = false;
      for (const Path& t : table.rho().paths()) {
        if (t.length() <= rr.length() && is_subpath(t, rr)) {
          vanishes = true;
          break;
        }
      }
      if (!vanishes) bad.emplace_back(n, i);
    }
  }
  return bad;
}

}  // namespace pathalg
