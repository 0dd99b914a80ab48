#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyra {

/// Raised when a search exceeds its configured node or time budget.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when data violates an invariant the library is entitled to rely on.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Point set over a ground set {0..v-1}, v <= 63, stored as one machine word.
/// Ordering is by the integer value of the bit vector; that order is the
/// canonical order used everywhere blocks are listed.
class Block {
  public:
    static constexpr int max_width = 63;

    Block() = default;

    explicit Block(int v) : v_(check_width(v)) {}

    Block(int v, std::uint64_t mask) : v_(check_width(v)), bits_(mask) {
        if (v < 64 && (mask >> v) != 0)
            throw std::invalid_argument("block mask has bits outside {0.." + std::to_string(v - 1) + "}");
    }

    static Block from_points(int v, std::span<const int> pts) {
        Block b(v);
        for (int p : pts) b.add(p);
        return b;
    }

    static Block from_points(int v, std::initializer_list<int> pts) {
        return from_points(v, std::span<const int>(pts.begin(), pts.size()));
    }

    int v() const { return v_; }
    std::uint64_t mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int p) const {
        check_point(p);
        return (bits_ >> p) & 1u;
    }

    void add(int p) {
        check_point(p);
        if ((bits_ >> p) & 1u) throw std::invalid_argument("duplicate point " + std::to_string(p));
        bits_ |= std::uint64_t{1} << p;
    }

    /// Points in ascending order.
    std::vector<int> points() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t m = bits_; m;) {
            int p = std::countr_zero(m);
            out.push_back(p);
            m &= m - 1;
        }
        return out;
    }

    int min_point() const {
        if (!bits_) throw std::logic_error("empty block has no points");
        return std::countr_zero(bits_);
    }

    int max_point() const {
        if (!bits_) throw std::logic_error("empty block has no points");
        return 63 - std::countl_zero(bits_);
    }

    Block complement() const { return Block(v_, all_mask(v_) & ~bits_); }

    bool subset_of(const Block& other) const {
        check_same(other);
        return (bits_ & ~other.bits_) == 0;
    }

    friend Block operator^(const Block& a, const Block& b) {
        a.check_same(b);
        return Block(a.v_, a.bits_ ^ b.bits_);
    }
    friend Block operator&(const Block& a, const Block& b) {
        a.check_same(b);
        return Block(a.v_, a.bits_ & b.bits_);
    }
    friend Block operator|(const Block& a, const Block& b) {
        a.check_same(b);
        return Block(a.v_, a.bits_ | b.bits_);
    }

    friend bool operator==(const Block& a, const Block& b) { return a.v_ == b.v_ && a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(const Block& a, const Block& b) {
        if (auto c = a.v_ <=> b.v_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

    static std::uint64_t all_mask(int v) { return v == 0 ? 0 : ~std::uint64_t{0} >> (64 - v); }

  private:
    static int check_width(int v) {
        if (v < 0 || v > max_width)
            throw std::invalid_argument("ground set size " + std::to_string(v) + " outside [0,63]");
        return v;
    }
    void check_point(int p) const {
        if (p < 0 || p >= v_)
            throw std::out_of_range("point " + std::to_string(p) + " outside {0.." + std::to_string(v_ - 1) + "}");
    }
    void check_same(const Block& other) const {
        if (v_ != other.v_) throw std::invalid_argument("blocks live on different ground sets");
    }

    int v_ = 0;
    std::uint64_t bits_ = 0;
};

/// Symmetric difference of two blocks on the same ground set.
inline Block sym_diff(const Block& a, const Block& b) { return a ^ b; }

/// Number of points common to both blocks.
inline int intersect_count(const Block& a, const Block& b) { return (a & b).size(); }

/// Bijection of {0..v-1} stored as the full image array. `then` composes
/// left to right: a.then(b) applies a first.
class Permutation {
  public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::uint64_t seen = 0;
        int v = static_cast<int>(images_.size());
        if (v > Block::max_width + 1) throw std::invalid_argument("permutation degree exceeds 63");
        for (int x : images_) {
            if (x < 0 || x >= v || ((seen >> x) & 1u))
                throw std::invalid_argument("image array is not a bijection");
            seen |= std::uint64_t{1} << x;
        }
    }

    static Permutation identity(int v) {
        std::vector<int> im(static_cast<std::size_t>(v));
        for (int i = 0; i < v; ++i) im[static_cast<std::size_t>(i)] = i;
        return Permutation(std::move(im));
    }

    int v() const { return static_cast<int>(images_.size()); }
    const std::vector<int>& images() const { return images_; }

    int operator()(int p) const { return images_.at(static_cast<std::size_t>(p)); }

    Permutation then(const Permutation& next) const {
        check_same(next);
        std::vector<int> im(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            im[i] = next.images_[static_cast<std::size_t>(images_[i])];
        return Permutation(std::move(im));
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            im[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        return Permutation(std::move(im));
    }

    Block apply(const Block& b) const {
        if (b.v() != v()) throw std::invalid_argument("block and permutation degrees differ");
        Block out(b.v());
        for (std::uint64_t m = b.mask(); m;) {
            int p = std::countr_zero(m);
            out.add(images_[static_cast<std::size_t>(p)]);
            m &= m - 1;
        }
        return out;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i)) return false;
        return true;
    }

    bool is_involution() const { return !is_identity() && then(*this).is_identity(); }

    /// Points moved by this permutation.
    Block support() const {
        Block s(v());
        for (int i = 0; i < v(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) s.add(i);
        return s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

  private:
    void check_same(const Permutation& other) const {
        if (images_.size() != other.images_.size())
            throw std::invalid_argument("permutation degrees differ");
    }

    std::vector<int> images_;
};

}  // namespace pyra
