#include "crystaldeg/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace crystaldeg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t r = 0; r < parts_.size(); ++r) {
        if (parts_[r] < 1)
            throw UsageError("partition parts must be positive");
        if (r > 0 && parts_[r] > parts_[r - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty())
        return Partition{};
    out.reserve(parts_[0]);
    for (int j = 1; j <= parts_[0]; ++j)
        out.push_back(static_cast<int>(std::count_if(
            parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s;
    for (size_t r = 0; r < parts_.size(); ++r) {
        if (r > 0)
            s += ',';
        s += std::to_string(parts_[r]);
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
    if (m < 0)
        throw UsageError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> acc;
    partitions_rec(m, m, acc, out);
    return out;
}

Tableau Tableau::from_rows(std::vector<Row> rows) {
    Tableau t;
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const Row& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    t.shape_ = Partition(std::move(parts));  // validates row lengths
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1)
                throw TableauError(static_cast<int>(r) + 1, static_cast<int>(c) + 1,
                                   "entries must be positive");
            if (c > 0 && rows[r][c] < rows[r][c - 1])
                throw TableauError(static_cast<int>(r) + 1, static_cast<int>(c) + 1,
                                   "row must weakly increase");
            if (r > 0 && rows[r][c] <= rows[r - 1][c])
                throw TableauError(static_cast<int>(r) + 1, static_cast<int>(c) + 1,
                                   "column must strictly increase upward");
        }
    }
    t.rows_ = std::move(rows);
    return t;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const Row& row : rows_)
        for (int x : row)
            m = std::max(m, x);
    return m;
}

bool Tableau::is_standard() const {
    const int m = size();
    std::vector<bool> seen(m + 1, false);
    for (const Row& row : rows_)
        for (int x : row) {
            if (x > m || seen[x])
                return false;
            seen[x] = true;
        }
    return true;
}

std::string Tableau::to_string() const {
    std::string s = "[";
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (r > 0)
            s += ',';
        s += '[';
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0)
                s += ',';
            s += std::to_string(rows_[r][c]);
        }
        s += ']';
    }
    s += ']';
    return s;
}

namespace {

// Fills cells bottom row first, left to right, choosing entries in increasing
// order; the output therefore comes out already in lexicographic order.
void ssyt_rec(const Partition& shape, int n, int r, int c,
              std::vector<Row>& rows, std::vector<Tableau>& out) {
    if (r == shape.length()) {
        out.push_back(Tableau::from_rows(rows));
        return;
    }
    int nr = r, nc = c + 1;
    if (nc == shape.part(r)) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, rows[r][c - 1]);
    if (r > 0)
        lo = std::max(lo, rows[r - 1][c] + 1);
    for (int x = lo; x <= n; ++x) {
        rows[r][c] = x;
        ssyt_rec(shape, n, nr, nc, rows, out);
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
    if (n < 1)
        throw UsageError("alphabet bound must be positive");
    if (shape.length() > n)
        throw UsageError("shape too tall for alphabet");
    std::vector<Tableau> out;
    if (shape.length() == 0) {
        out.push_back(Tableau{});
        return out;
    }
    std::vector<Row> rows;
    for (int r = 0; r < shape.length(); ++r)
        rows.emplace_back(shape.part(r), 0);
    ssyt_rec(shape, n, 0, 0, rows, out);
    return out;
}

namespace {

// Grows tableaux by placing 1..m in increasing order at addable corners.
void syt_rec(const Partition& shape, int next, std::vector<int>& filled,
             std::vector<Row>& rows, std::vector<Tableau>& out) {
    const int m = shape.size();
    if (next > m) {
        out.push_back(Tableau::from_rows(rows));
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        if (filled[r] == shape.part(r))
            continue;
        if (r > 0 && filled[r] >= filled[r - 1])
            continue;
        rows[r][filled[r]] = next;
        ++filled[r];
        syt_rec(shape, next + 1, filled, rows, out);
        --filled[r];
    }
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& shape) {
    std::vector<Tableau> out;
    if (shape.length() == 0) {
        out.push_back(Tableau{});
        return out;
    }
    std::vector<Row> rows;
    for (int r = 0; r < shape.length(); ++r)
        rows.emplace_back(shape.part(r), 0);
    std::vector<int> filled(shape.length(), 0);
    syt_rec(shape, 1, filled, rows, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word reading_word(const Tableau& t) {
    Word w;
    w.reserve(t.size());
    for (int r = t.shape().length() - 1; r >= 0; --r)
        w.insert(w.end(), t.rows()[r].begin(), t.rows()[r].end());
    return w;
}

WeightVector content(const Tableau& t, int n) {
    if (n < 1)
        throw UsageError("alphabet bound must be positive");
    WeightVector counts(n, 0);
    for (const Row& row : t.rows())
        for (int x : row) {
            if (x > n)
                throw UsageError("tableau entry exceeds the alphabet bound");
            ++counts[x - 1];
        }
    return counts;
}

Tableau tableau_from_word(const Partition& shape, const Word& w) {
    if (static_cast<int>(w.size()) != shape.size())
        throw UsageError("word length does not match the shape");
    std::vector<Row> rows(shape.length());
    size_t pos = 0;
    for (int r = shape.length() - 1; r >= 0; --r) {
        rows[r].assign(w.begin() + pos, w.begin() + pos + shape.part(r));
        pos += shape.part(r);
    }
    return Tableau::from_rows(std::move(rows));
}

Tableau transpose(const Tableau& t) {
    const Partition conj = t.shape().conjugate();
    std::vector<Row> rows(conj.length());
    for (int r = 0; r < conj.length(); ++r)
        rows[r].resize(conj.part(r));
    for (int r = 0; r < t.shape().length(); ++r)
        for (int c = 0; c < t.shape().part(r); ++c)
            rows[c][r] = t.at(r, c);
    return Tableau::from_rows(std::move(rows));
}

std::string word_to_string(const Word& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            s += ',';
        s += std::to_string(w[i]);
    }
    s += ')';
    return s;
}

}  // namespace crystaldeg
