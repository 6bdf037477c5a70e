#pragma once

#include <compare>
#include <string>
#include <vector>

#include "crystaldeg/errors.hpp"

namespace crystaldeg {

using Row = std::vector<int>;
using Word = std::vector<int>;
// counts[i-1] = multiplicity of the letter i
using WeightVector = std::vector<int>;

// Weakly decreasing positive parts; the empty partition is a valid shape.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int r) const { return parts_.at(r); }  // 0-based row index
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    std::string to_string() const;  // comma-separated parts

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of m in reverse-lexicographic order, (m) first.
std::vector<Partition> partitions_of(int m);

// Semi-standard filling in French orientation: rows()[0] is the bottom row,
// rows weakly increase left to right, columns strictly increase bottom to top.
class Tableau {
public:
    Tableau() = default;  // empty shape
    static Tableau from_rows(std::vector<Row> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<Row>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int at(int r, int c) const { return rows_[r][c]; }
    int max_entry() const;
    // entries are exactly 1..size(), each once
    bool is_standard() const;
    std::string to_string() const;  // "[[1,2],[3,4]]", bottom row first

    auto operator<=>(const Tableau&) const = default;

private:
    Partition shape_;
    std::vector<Row> rows_;
};

// Every semi-standard tableau of the shape with entries <= n, in lexicographic
// order on the concatenated rows (bottom row first).
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

// Every standard tableau of the shape, in the same lexicographic order.
std::vector<Tableau> enumerate_syt(const Partition& shape);

// Row reading word: top row down to the bottom row, each row left to right.
Word reading_word(const Tableau& t);

WeightVector content(const Tableau& t, int n);

// Inverse of reading_word for a fixed shape; validates the resulting filling.
Tableau tableau_from_word(const Partition& shape, const Word& w);

Tableau transpose(const Tableau& t);

std::string word_to_string(const Word& w);

}  // namespace crystaldeg
