#ifndef RANK3_DEPTH_HPP
#define RANK3_DEPTH_HPP

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace rank3 {

// Moves-to-win under optimal play; infinite for positions Breaker wins.
class Depth {
 public:
  constexpr Depth() = default;
  constexpr explicit Depth(int moves) : v_(moves) {}

  static constexpr Depth infinite() { return Depth(kInf); }

  constexpr bool finite() const noexcept { return v_ != kInf; }
  constexpr int value() const noexcept { return v_; }

  // One more move on top of this depth; infinity absorbs.
  constexpr Depth next() const noexcept { return finite() ? Depth(v_ + 1) : *this; }

  std::string str() const { return finite() ? std::to_string(v_) : "inf"; }

  friend constexpr auto operator<=>(Depth, Depth) = default;

  friend std::ostream& operator<<(std::ostream& os, Depth d) { return os << d.str(); }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int v_ = 0;
};

}  // namespace rank3

#endif  // RANK3_DEPTH_HPP
