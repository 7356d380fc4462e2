#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace exch {

/// Default enumeration cap: operations that scan a whole state space
/// refuse to run past this many states unless the caller raises it.
inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 24;

/// Alphabet symbols as they appear in files. Cells are stored internally
/// as indices into the owning block's alphabet.
using Symbol = long;

/// A state is one alphabet index per cell, in row-major cell order.
using State = std::vector<int>;

struct Block {
    int length = 0;
    std::vector<Symbol> alphabet;
};

enum class SpaceKind { Sequence, Array, Blocked };

/// An enumerable finite state space: sequences over an alphabet, m x n
/// arrays, or a product of independently-permutable sequence blocks.
/// States biject with indices in [0, size) via mixed-radix encoding with
/// the first cell most significant, so index order equals lexicographic
/// order on states.
class StateSpace {
public:
    static StateSpace sequence(int length, std::vector<Symbol> alphabet);
    static StateSpace array(int rows, int cols, std::vector<Symbol> alphabet);
    static StateSpace blocked(std::vector<Block> blocks);

    SpaceKind kind() const { return kind_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    int cell_count() const { return cell_count_; }
    int block_of_cell(int cell) const { return cell_block_[cell]; }
    int block_offset(int b) const { return block_offset_[b]; }
    int radix(int cell) const { return static_cast<int>(blocks_[cell_block_[cell]].alphabet.size()); }

    /// Total number of states, or false if it overflows 64 bits.
    bool try_size(std::uint64_t* out) const;
    /// Total number of states; throws cap_exceeded (naming the cap) if
    /// it overflows or exceeds `cap`.
    std::uint64_t size_checked(std::uint64_t cap = kDefaultStateCap) const;

    State decode(std::uint64_t index) const;
    std::uint64_t encode(const State& s) const;

    /// "0,1,1" for sequences/arrays (row-major); blocks joined by ';'.
    std::string format_state(const State& s) const;
    State parse_state(const std::string& text) const;

    bool operator==(const StateSpace& other) const;
    bool operator!=(const StateSpace& other) const { return !(*this == other); }

private:
    StateSpace() = default;
    void finish_init();

    SpaceKind kind_ = SpaceKind::Sequence;
    int rows_ = 0, cols_ = 0; // Array only
    std::vector<Block> blocks_;
    int cell_count_ = 0;
    std::vector<int> cell_block_;   // cell -> owning block
    std::vector<int> block_offset_; // block -> first cell
};

} // namespace exch
