#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cprforge/errors.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/perm_group.hpp"
#include "cprforge/permutation.hpp"

namespace cprforge {

enum class IpMode { recursive, full };

inline std::string to_string(IpMode mode) { return mode == IpMode::recursive ? "recursive" : "full"; }

/// Outcome of an intersection-property check.
struct IpCertificate {
  bool pass = true;
  // Failing pair of kept-label subsets (sorted), and the subgroup orders involved.
  std::vector<int> left;
  std::vector<int> right;
  std::uint64_t expected_order = 0;  // |<rho_k : k in left ∩ right>|
  std::uint64_t actual_order = 0;    // |<rho_left> ∩ <rho_right>|
  std::optional<Permutation> witness;
};

struct StringPropertyVerdict {
  bool pass = true;
  int label_i = 0;
  int label_j = 0;
};

struct CGroupVerdict {
  StringPropertyVerdict string_property;
  std::optional<IpCertificate> certificate;  // absent when the string property fails

  bool is_string_c_group() const { return string_property.pass && certificate && certificate->pass; }
};

struct IpOptions {
  std::uint64_t cap = kDefaultIntersectionCap;
  int max_full_rank = 10;
  unsigned jobs = 1;
  bool any_failure = false;  // with jobs > 1, report whichever failure is found first
};

/**
 * Ordered involutions indexed by a contiguous label window.
 *
 * Sections <rho_k : k in I> are built lazily and cached under a mutex, so the
 * checkers may be called concurrently.
 */
class Sggi {
 public:
  Sggi(LabelWindow window, std::vector<Permutation> involutions, bool allow_identity = false)
      : window_(window), rho_(std::move(involutions)), cache_(std::make_shared<Cache>()) {
    if (window_.rank() < 0 || static_cast<std::size_t>(window_.rank()) != rho_.size())
      throw LabelOutsideWindow("window rank does not match the number of generators");
    if (window_.rank() > 63) throw RankTooLarge("rank above 63 is not supported");
    degree_ = rho_.empty() ? 0 : rho_.front().degree();
    for (std::size_t k = 0; k < rho_.size(); ++k) {
      if (rho_[k].degree() != degree_) throw DegreeMismatch(degree_, rho_[k].degree());
      if (rho_[k].is_identity()) {
        if (!allow_identity) throw IdentityGenerator(window_.lo + static_cast<int>(k));
      } else if (!is_involution(rho_[k])) {
        throw InvalidPermutation("generator " + std::to_string(window_.lo + static_cast<int>(k)) + " is not an involution");
      }
    }
  }

  /// One generator per label of the graph's window (or of `window`, if given).
  static Sggi from_graph(const LabeledGraph& g, std::optional<LabelWindow> window = std::nullopt, bool allow_identity = false) {
    auto w = window ? window : g.window();
    if (!w) throw IdentityGenerator(0);
    for (int l : g.labels())
      if (!w->contains(l)) throw LabelOutsideWindow("label " + std::to_string(l) + " outside the window");
    std::vector<Permutation> rho;
    for (int l = w->lo; l <= w->hi; ++l) rho.push_back(generator_of_label(g, l));
    return Sggi(*w, std::move(rho), allow_identity);
  }

  const LabelWindow& window() const noexcept { return window_; }
  int rank() const noexcept { return window_.rank(); }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& involutions() const noexcept { return rho_; }

  const Permutation& rho(int label) const {
    if (!window_.contains(label)) throw LabelOutsideWindow("label " + std::to_string(label) + " outside the window");
    return rho_[static_cast<std::size_t>(label - window_.lo)];
  }

  /// Same group, generators in reverse order over the same window.
  Sggi dual() const {
    std::vector<Permutation> reversed(rho_.rbegin(), rho_.rend());
    return Sggi(window_, std::move(reversed), true);
  }

  std::uint64_t label_mask(const std::vector<int>& labels) const {
    std::uint64_t mask = 0;
    for (int l : labels) {
      if (!window_.contains(l)) throw LabelOutsideWindow("label " + std::to_string(l) + " outside the window");
      mask |= std::uint64_t{1} << (l - window_.lo);
    }
    return mask;
  }

  std::vector<int> mask_labels(std::uint64_t mask) const {
    std::vector<int> out;
    for (int k = 0; k < rank(); ++k)
      if (mask >> k & 1) out.push_back(window_.lo + k);
    return out;
  }

  /// <rho_k : k in labels>.
  std::shared_ptr<const PermGroup> section(const std::vector<int>& labels) const { return section_mask(label_mask(labels)); }

  std::shared_ptr<const PermGroup> section_mask(std::uint64_t mask) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->sections.find(mask);
      if (it != cache_->sections.end()) return it->second;
    }
    std::vector<Permutation> gens;
    for (int k = 0; k < rank(); ++k)
      if (mask >> k & 1) gens.push_back(rho_[static_cast<std::size_t>(k)]);
    auto group = std::make_shared<const PermGroup>(degree_, std::move(gens));
    std::lock_guard lock(cache_->mutex);
    return cache_->sections.emplace(mask, std::move(group)).first->second;
  }

  std::shared_ptr<const PermGroup> group() const { return section_mask(full_mask()); }

  std::uint64_t full_mask() const noexcept {
    return rank() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rank()) - 1;
  }

  /// Section for the contiguous interval [first, last] of labels.
  std::shared_ptr<const PermGroup> interval(int first, int last) const {
    std::uint64_t mask = 0;
    for (int l = first; l <= last; ++l) mask |= std::uint64_t{1} << (l - window_.lo);
    return section_mask(mask);
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::uint64_t, std::shared_ptr<const PermGroup>> sections;
  };

  LabelWindow window_;
  std::vector<Permutation> rho_;
  std::size_t degree_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// (rho_i rho_j)^2 = 1 whenever |i - j| >= 2; reports the first failing pair.
inline StringPropertyVerdict check_string_property(const Sggi& s) {
  const auto& w = s.window();
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = i + 2; j <= w.hi; ++j) {
      Permutation prod = s.rho(i) * s.rho(j);
      if (!(prod * prod).is_identity()) return {false, i, j};
    }
  return {};
}

/// Orders of rho_{k-1} rho_k for consecutive labels.
inline std::vector<std::uint64_t> schlafli_type(const Sggi& s) {
  if (s.rank() < 2) throw RankTooLarge("Schlafli type needs rank at least 2");
  std::vector<std::uint64_t> out;
  for (int l = s.window().lo + 1; l <= s.window().hi; ++l) out.push_back(element_order(s.rho(l - 1) * s.rho(l)));
  return out;
}

namespace detail {

/**
 * Compares <left> ∩ <right> against <left ∩ right>. The smaller of the two
 * sections is enumerated in chain order; the first element lying in the other
 * section but outside the expected subgroup is the witness.
 */
inline IpCertificate compare_intersection(const Sggi& s, std::uint64_t left, std::uint64_t right, std::uint64_t cap) {
  auto a = s.section_mask(left);
  auto b = s.section_mask(right);
  auto expected = s.section_mask(left & right);

  IpCertificate cert;
  cert.left = s.mask_labels(left);
  cert.right = s.mask_labels(right);
  cert.expected_order = expected->order();

  const PermGroup& small = a->order() <= b->order() ? *a : *b;
  const PermGroup& large = a->order() <= b->order() ? *b : *a;
  if (small.order() > cap) {
    IntersectionTooLarge error(small.order(), cap);
    error.left_labels = cert.left;
    error.right_labels = cert.right;
    throw error;
  }
  // The expected subgroup always lies in the intersection.
  if (small.order() == expected->order()) {
    cert.actual_order = expected->order();
    return cert;
  }
  small.for_each_element([&](const Permutation& g) {
    if (large.contains(g) && !expected->contains(g)) {
      cert.witness = g;
      return false;
    }
    return true;
  });
  if (!cert.witness) {
    cert.actual_order = expected->order();
    return cert;
  }
  cert.pass = false;
  cert.actual_order = intersection(*a, *b, cap).order();
  return cert;
}

}  // namespace detail

/**
 * Intersection property via contiguous intervals: [i..j] holds iff [i..j-1]
 * and [i+1..j] hold and <[i..j-1]> ∩ <[i+1..j]> = <[i+1..j-1]>. Intervals are
 * settled shortest first (then by lower end), so the reported failure is an
 * innermost one. Assumes the string property.
 */
inline IpCertificate check_ip_recursive(const Sggi& s, std::uint64_t cap = kDefaultIntersectionCap) {
  const int lo = s.window().lo, hi = s.window().hi;
  auto mask_of = [&](int first, int last) {
    std::uint64_t mask = 0;
    for (int l = first; l <= last; ++l) mask |= std::uint64_t{1} << (l - lo);
    return mask;
  };
  for (int length = 2; length <= s.rank(); ++length)
    for (int first = lo; first + length - 1 <= hi; ++first) {
      int last = first + length - 1;
      auto cert = detail::compare_intersection(s, mask_of(first, last - 1), mask_of(first + 1, last), cap);
      if (!cert.pass) return cert;
    }
  IpCertificate ok;
  ok.expected_order = ok.actual_order = s.group()->order();
  return ok;
}

/**
 * Intersection property checked on every pair of label subsets (I, J) with
 * neither containing the other, taken with I < J as bitmasks in increasing
 * order. The first failing pair in that order is reported, also when the
 * pairs are spread over several threads, unless `any_failure` is set.
 */
inline IpCertificate check_ip_full(const Sggi& s, const IpOptions& options = {}) {
  if (s.rank() > options.max_full_rank)
    throw RankTooLarge("rank " + std::to_string(s.rank()) + " exceeds the full-check bound " + std::to_string(options.max_full_rank));
  const std::uint64_t subsets = std::uint64_t{1} << s.rank();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (std::uint64_t i = 0; i < subsets; ++i)
    for (std::uint64_t j = i + 1; j < subsets; ++j)
      if ((i & j) != i && (i & j) != j) pairs.emplace_back(i, j);

  auto pass_all = [&] {
    IpCertificate ok;
    ok.expected_order = ok.actual_order = s.group()->order();
    return ok;
  };

  if (options.jobs <= 1) {
    for (auto [i, j] : pairs) {
      auto cert = detail::compare_intersection(s, i, j, options.cap);
      if (!cert.pass) return cert;
    }
    return pass_all();
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{pairs.size()};
  std::mutex result_mutex;
  std::optional<IpCertificate> failure;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= pairs.size() || k > first_failure.load()) return;
        if (options.any_failure && first_failure.load() < pairs.size()) return;
        auto cert = detail::compare_intersection(s, pairs[k].first, pairs[k].second, options.cap);
        if (cert.pass) continue;
        std::lock_guard lock(result_mutex);
        if (k < first_failure.load()) {
          first_failure = k;
          failure = std::move(cert);
        }
      }
    } catch (...) {
      std::lock_guard lock(result_mutex);
      if (!error) error = std::current_exception();
      first_failure = 0;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < options.jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return failure ? *failure : pass_all();
}

inline CGroupVerdict is_string_c_group(const Sggi& s, IpMode mode = IpMode::recursive, const IpOptions& options = {}) {
  CGroupVerdict verdict;
  verdict.string_property = check_string_property(s);
  if (!verdict.string_property.pass) return verdict;
  verdict.certificate = mode == IpMode::recursive ? check_ip_recursive(s, options.cap) : check_ip_full(s, options);
  return verdict;
}

/// Multiplies rho_k by a transposition on two new points.
inline Sggi sesqui_extend(const Sggi& s, int k) {
  if (!s.window().contains(k)) throw LabelOutsideWindow("label " + std::to_string(k) + " outside the window");
  const std::size_t n = s.degree();
  std::vector<Permutation> rho;
  Permutation tau = Permutation::transposition(n + 2, static_cast<Point>(n + 1), static_cast<Point>(n + 2));
  for (int l = s.window().lo; l <= s.window().hi; ++l) {
    Permutation p = s.rho(l).extended(n + 2);
    rho.push_back(l == k ? p * tau : p);
  }
  return Sggi(s.window(), std::move(rho), true);
}

/// Graph form of the sesqui-extension: a disjoint k-edge on two new vertices.
inline LabeledGraph sesqui_extend(const LabeledGraph& g, int k) {
  return union_disjoint(g, LabeledGraph(2, {Edge{k, 1, 2}}));
}

}  // namespace cprforge
