#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace anyangle {

enum class tie_policy { larger_g, smaller_g };

inline const char* to_string(tie_policy t) { return t == tie_policy::larger_g ? "larger_g" : "smaller_g"; }

inline tie_policy parse_tie_policy(const std::string& s) {
  if (s == "larger_g") return tie_policy::larger_g;
  if (s == "smaller_g") return tie_policy::smaller_g;
  throw std::invalid_argument("unknown tie policy '" + s + "'");
}

// Keys closer than this are treated as equal.
inline constexpr double key_resolution = 1e-9;

// Indexed binary min-heap over dense ids. Ordering: f, then g per the tie
// policy, then insertion order. f and g are snapped to multiples of
// key_resolution first; values that are equal up to rounding noise then tie
// exactly and the ordering stays a strict weak order.
class open_list {
 public:
  struct entry {
    std::size_t id;
    double f;
    double g;
  };

  explicit open_list(tie_policy tie, std::size_t capacity = 0) : tie_(tie), pos_(capacity, npos) {}

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  bool contains(std::size_t id) const { return id < pos_.size() && pos_[id] != npos; }

  void insert(std::size_t id, double f, double g) {
    if (contains(id)) throw std::logic_error("open_list: id already present");
    if (id >= pos_.size()) pos_.resize(id + 1, npos);
    heap_.push_back({std::round(f / key_resolution), tie_ == tie_policy::larger_g ? -std::round(g / key_resolution)
                                                                                   : std::round(g / key_resolution),
                     seq_++, id, f, g});
    pos_[id] = heap_.size() - 1;
    up(heap_.size() - 1);
  }

  void remove(std::size_t id) {
    if (!contains(id)) throw std::logic_error("open_list: id not present");
    const std::size_t i = pos_[id];
    swap_at(i, heap_.size() - 1);
    heap_.pop_back();
    pos_[id] = npos;
    if (i < heap_.size()) {
      up(i);
      down(i);
    }
  }

  // Remove + Insert with a fresh sequence number.
  void insert_or_update(std::size_t id, double f, double g) {
    if (contains(id)) remove(id);
    insert(id, f, g);
  }

  entry top() const {
    if (heap_.empty()) throw std::logic_error("open_list: top of empty list");
    return {heap_[0].id, heap_[0].f, heap_[0].g};
  }

  entry pop() {
    const entry e = top();
    remove(e.id);
    return e;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct item {
    double fk, gk;
    std::uint64_t seq;
    std::size_t id;
    double f, g;
  };

  static bool before(const item& a, const item& b) {
    if (a.fk != b.fk) return a.fk < b.fk;
    if (a.gk != b.gk) return a.gk < b.gk;
    return a.seq < b.seq;
  }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i].id] = i;
    pos_[heap_[j].id] = j;
  }

  void up(std::size_t i) {
    while (i > 0) {
      const std::size_t p = (i - 1) / 2;
      if (!before(heap_[i], heap_[p])) break;
      swap_at(i, p);
      i = p;
    }
  }

  void down(std::size_t i) {
    for (;;) {
      const std::size_t l = 2 * i + 1, r = l + 1;
      std::size_t m = i;
      if (l < heap_.size() && before(heap_[l], heap_[m])) m = l;
      if (r < heap_.size() && before(heap_[r], heap_[m])) m = r;
      if (m == i) return;
      swap_at(i, m);
      i = m;
    }
  }

  tie_policy tie_;
  std::uint64_t seq_ = 0;
  std::vector<item> heap_;
  std::vector<std::size_t> pos_;
};

// Pops the next vertex in expansion order.
inline std::size_t pop_order_probe(open_list& open) {
  if (open.empty()) throw std::logic_error("pop_order_probe: open list is empty");
  return open.pop().id;
}

}  // namespace anyangle
