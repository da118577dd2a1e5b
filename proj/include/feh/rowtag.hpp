#ifndef FEH_ROWTAG_HPP
#define FEH_ROWTAG_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace feh {

// Packed row-order word(s). Rows of the practical grid never move; their
// logical age order and the two distinguished roles (merge row, new-old
// row) live in this structure instead. Each row costs ceil(log2(rows)) + 2
// bits: its index at that age rank plus one flag bit per role.
struct RowTag {
  std::array<std::uint64_t, 8> words{};
  std::uint32_t rows = 0;
};

// Bits per row entry.
std::uint32_t tag_bits_per_row(std::uint32_t rows);
// 64-bit words needed for `rows` entries.
std::uint32_t tag_word_count(std::uint32_t rows);

// order[i] = index of the i-th oldest row; must be a permutation of
// 0..rows-1. merge_row / new_old_row are row indices or -1 for none.
RowTag tag_encode(const std::vector<std::uint32_t>& order, int merge_row,
                  int new_old_row);

// Inverse of tag_encode.
void tag_decode(const RowTag& tag, std::vector<std::uint32_t>& order,
                int& merge_row, int& new_old_row);

}  // namespace feh

#endif
