#include "exch/state_space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "exch/errors.hpp"

namespace exch {

namespace {

void check_alphabet(const std::vector<Symbol>& alphabet) {
    if (alphabet.empty()) throw validation_error("alphabet must be non-empty");
    std::set<Symbol> seen(alphabet.begin(), alphabet.end());
    if (seen.size() != alphabet.size()) throw validation_error("alphabet contains duplicate symbols");
}

} // namespace

void StateSpace::finish_init() {
    cell_count_ = 0;
    cell_block_.clear();
    block_offset_.clear();
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].length < 0) throw validation_error("negative block length");
        check_alphabet(blocks_[b].alphabet);
        block_offset_.push_back(cell_count_);
        for (int i = 0; i < blocks_[b].length; ++i) cell_block_.push_back(static_cast<int>(b));
        cell_count_ += blocks_[b].length;
    }
}

StateSpace StateSpace::sequence(int length, std::vector<Symbol> alphabet) {
    StateSpace s;
    s.kind_ = SpaceKind::Sequence;
    s.blocks_ = {Block{length, std::move(alphabet)}};
    s.finish_init();
    return s;
}

StateSpace StateSpace::array(int rows, int cols, std::vector<Symbol> alphabet) {
    if (rows < 1 || cols < 1) throw validation_error("array dimensions must be positive");
    StateSpace s;
    s.kind_ = SpaceKind::Array;
    s.rows_ = rows;
    s.cols_ = cols;
    s.blocks_ = {Block{rows * cols, std::move(alphabet)}};
    s.finish_init();
    return s;
}

StateSpace StateSpace::blocked(std::vector<Block> blocks) {
    if (blocks.empty()) throw validation_error("blocked space needs at least one block");
    StateSpace s;
    s.kind_ = SpaceKind::Blocked;
    s.blocks_ = std::move(blocks);
    s.finish_init();
    return s;
}

bool StateSpace::try_size(std::uint64_t* out) const {
    std::uint64_t n = 1;
    for (int c = 0; c < cell_count_; ++c) {
        std::uint64_t r = static_cast<std::uint64_t>(radix(c));
        if (r != 0 && n > UINT64_MAX / r) return false;
        n *= r;
    }
    *out = n;
    return true;
}

std::uint64_t StateSpace::size_checked(std::uint64_t cap) const {
    std::uint64_t n = 0;
    if (!try_size(&n) || n > cap)
        throw cap_exceeded("state space exceeds enumeration cap of " + std::to_string(cap) + " states");
    return n;
}

State StateSpace::decode(std::uint64_t index) const {
    State s(static_cast<std::size_t>(cell_count_));
    for (int c = cell_count_ - 1; c >= 0; --c) {
        std::uint64_t r = static_cast<std::uint64_t>(radix(c));
        s[static_cast<std::size_t>(c)] = static_cast<int>(index % r);
        index /= r;
    }
    if (index != 0) throw validation_error("state index out of range");
    return s;
}

std::uint64_t StateSpace::encode(const State& s) const {
    if (static_cast<int>(s.size()) != cell_count_) throw validation_error("state has wrong cell count");
    std::uint64_t idx = 0;
    for (int c = 0; c < cell_count_; ++c) {
        int r = radix(c);
        int v = s[static_cast<std::size_t>(c)];
        if (v < 0 || v >= r) throw validation_error("cell value out of alphabet range");
        idx = idx * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(v);
    }
    return idx;
}

std::string StateSpace::format_state(const State& s) const {
    if (static_cast<int>(s.size()) != cell_count_) throw validation_error("state has wrong cell count");
    std::ostringstream out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b > 0) out << ';';
        for (int i = 0; i < blocks_[b].length; ++i) {
            if (i > 0) out << ',';
            out << blocks_[b].alphabet[static_cast<std::size_t>(s[static_cast<std::size_t>(block_offset_[b] + i)])];
        }
    }
    return out.str();
}

State StateSpace::parse_state(const std::string& text) const {
    std::vector<std::string> block_texts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            block_texts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    block_texts.push_back(cur);
    if (block_texts.size() != blocks_.size())
        throw validation_error("state '" + text + "' has " + std::to_string(block_texts.size()) +
                               " blocks, space has " + std::to_string(blocks_.size()));

    State s;
    s.reserve(static_cast<std::size_t>(cell_count_));
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::vector<Symbol> symbols;
        if (!block_texts[b].empty()) {
            std::istringstream in(block_texts[b]);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                try {
                    symbols.push_back(std::stol(tok));
                } catch (const std::exception&) {
                    throw validation_error("bad symbol '" + tok + "' in state '" + text + "'");
                }
            }
        }
        if (static_cast<int>(symbols.size()) != blocks_[b].length)
            throw validation_error("state '" + text + "' has wrong length in block " + std::to_string(b));
        const auto& alpha = blocks_[b].alphabet;
        for (Symbol sym : symbols) {
            auto it = std::find(alpha.begin(), alpha.end(), sym);
            if (it == alpha.end())
                throw validation_error("symbol " + std::to_string(sym) + " not in alphabet (state '" + text + "')");
            s.push_back(static_cast<int>(it - alpha.begin()));
        }
    }
    return s;
}

bool StateSpace::operator==(const StateSpace& other) const {
    if (kind_ != other.kind_ || rows_ != other.rows_ || cols_ != other.cols_) return false;
    if (blocks_.size() != other.blocks_.size()) return false;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (blocks_[b].length != other.blocks_[b].length) return false;
        if (blocks_[b].alphabet != other.blocks_[b].alphabet) return false;
    }
    return true;
}

} // namespace exch
