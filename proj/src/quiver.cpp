#include "pathalg/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pathalg {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
  for (const auto& v : vertices) {
    if (v.empty()) fail(ErrorCode::kParse, "empty vertex id");
    if (vertex_by_name_.count(v))
      fail(ErrorCode::kParse, "duplicate vertex id: " + v);
    vertex_by_name_[v] = static_cast<int>(vertex_names_.size());
    vertex_names_.push_back(v);
  }
  for (const auto& [name, src, tgt] : arrows) {
    if (name.empty()) fail(ErrorCode::kParse, "empty arrow id");
    if (arrow_by_name_.count(name))
      fail(ErrorCode::kParse, "duplicate arrow id: " + name);
    auto si = vertex_by_name_.find(src);
    auto ti = vertex_by_name_.find(tgt);
    if (si == vertex_by_name_.end() || ti == vertex_by_name_.end())
      fail(ErrorCode::kParse, "arrow " + name + " uses undeclared vertex");
    arrow_by_name_[name] = static_cast<int>(arrows_.size());
    arrows_.push_back(Arrow{name, si->second, ti->second});
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_by_name_.find(name);
  if (it == vertex_by_name_.end())
    fail(ErrorCode::kParse, "unknown vertex: " + name);
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_by_name_.find(name);
  if (it == arrow_by_name_.end())
    fail(ErrorCode::kParse, "unknown arrow: " + name);
  return it->second;
}

bool Quiver::operator==(const Quiver& other) const {
  if (vertex_names_ != other.vertex_names_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    const Arrow& b = other.arrows_[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target)
      return false;
  }
  return true;
}

Path Path::vertex(const Quiver& q, int v) {
  if (v < 0 || v >= q.num_vertices())
    fail(ErrorCode::kInvalidArgument, "vertex index out of range");
  Path p;
  p.quiver_ = &q;
  p.base_vertex_ = v;
  return p;
}

Path Path::of_arrows(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty())
    fail(ErrorCode::kInvalidArgument, "of_arrows needs at least one arrow");
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] < 0 || arrows[i] >= q.num_arrows())
      fail(ErrorCode::kInvalidArgument, "arrow index out of range");
    if (i > 0 && q.arrow(arrows[i - 1]).target != q.arrow(arrows[i]).source)
      fail(ErrorCode::kCompositionMismatch,
           "arrows do not compose at position " + std::to_string(i));
  }
  Path p;
  p.quiver_ = &q;
  p.arrows_ = std::move(arrows);
  return p;
}

Path Path::from_names(const Quiver& q, const std::vector<std::string>& arrow_names) {
  std::vector<int> idx;
  idx.reserve(arrow_names.size());
  for (const auto& n : arrow_names) idx.push_back(q.arrow_index(n));
  return of_arrows(q, std::move(idx));
}

int Path::source() const {
  if (arrows_.empty()) return base_vertex_;
  return quiver_->arrow(arrows_.front()).source;
}

int Path::target() const {
  if (arrows_.empty()) return base_vertex_;
  return quiver_->arrow(arrows_.back()).target;
}

Path Path::slice(int begin, int len) const {
  if (begin < 0 || len < 0 || begin + len > length())
    fail(ErrorCode::kInvalidArgument, "slice out of range");
  if (len == 0) {
    // Vertex sitting between positions begin-1 and begin.
    int v;
    if (length() == 0)
      v = base_vertex_;
    else if (begin < length())
      v = quiver_->arrow(arrows_[begin]).source;
    else
      v = quiver_->arrow(arrows_.back()).target;
    return Path::vertex(*quiver_, v);
  }
  std::vector<int> sub(arrows_.begin() + begin, arrows_.begin() + begin + len);
  return Path::of_arrows(*quiver_, std::move(sub));
}

std::string Path::str() const {
  if (arrows_.empty()) return "e_" + quiver_->vertex_name(base_vertex_);
  std::ostringstream os;
  for (size_t i = 0; i < arrows_.size(); ++i) {
    if (i) os << '*';
    os << quiver_->arrow(arrows_[i]).name;
  }
  return os.str();
}

bool Path::operator==(const Path& other) const {
  if (arrows_.empty() != other.arrows_.empty()) return false;
  if (arrows_.empty()) return base_vertex_ == other.base_vertex_;
  return arrows_ == other.arrows_;
}

bool Path::operator<(const Path& other) const {
  if (length() != other.length()) return length() < other.length();
  if (arrows_.empty()) return base_vertex_ < other.base_vertex_;
  return arrows_ < other.arrows_;
}

std::optional<Path> try_compose(const Path& p, const Path& q) {
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_vertex()) return q;
  if (q.is_vertex()) return p;
  std::vector<int> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path::of_arrows(p.quiver(), std::move(arrows));
}

Path compose(const Path& p, const Path& q) {
  auto r = try_compose(p, q);
  if (!r)
    fail(ErrorCode::kCompositionMismatch,
         "cannot compose " + p.str() + " with " + q.str());
  return *r;
}

std::vector<int> subpath_occurrences(const Path& q, const Path& p, bool proper) {
  if (q.length() < 1)
    fail(ErrorCode::kInvalidArgument, "subpath query needs ℓ(q) ≥ 1");
  std::vector<int> out;
  int n = p.length(), m = q.length();
  for (int off = 0; off + m <= n; ++off) {
    bool hit = true;
    for (int i = 0; i < m; ++i) {
      if (p.arrow_at(off + i) != q.arrow_at(i)) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    if (proper && (off < 1 || off + m > n - 1)) continue;
    out.push_back(off);
  }
  return out;
}

bool is_subpath(const Path& q, const Path& p, bool proper) {
  return !subpath_occurrences(q, p, proper).empty();
}

Path OverlapWitness::word() const { return compose(p_, r); }

int OverlapWitness::amount() const { return p_.length() - s.length(); }

std::vector<OverlapWitness> overlaps(const Path& p, const Path& q) {
  if (p.length() < 1 || q.length() < 1)
    fail(ErrorCode::kInvalidArgument, "overlaps need ℓ ≥ 1 on both sides");
  std::vector<OverlapWitness> out;
  // Shared segment length m: a proper suffix of p equal to a proper
  // prefix of q.
  for (int m = 1; m < std::min(p.length(), q.length()) + 1; ++m) {
    if (m >= p.length() || m >= q.length()) break;  // ℓ(r), ℓ(s) ≥ 1
    bool hit = true;
    for (int i = 0; i < m; ++i) {
      if (p.arrow_at(p.length() - m + i) != q.arrow_at(i)) {
        hit = false;
        break;
      }
    }
    if (!hit) continue;
    OverlapWitness w;
    w.p_ = p;
    w.q_ = q;
    w.r = q.slice(m, q.length() - m);
    w.s = p.slice(0, p.length() - m);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Path> maximal_overlaps(const Path& t_prime, const Path& t,
                                   const std::vector<Path>& rho) {
  std::vector<Path> out;
  for (const auto& w : overlaps(t_prime, t)) {
    Path word = w.word();
    bool maximal = true;
    for (const Path& u : rho) {
      if (is_subpath(u, word, /*proper=*/true)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(word);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pathalg
