#include "wschur/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wschur {

Partition::Partition(int d, std::vector<int> rows) : d_(d), rows_(std::move(rows)) {
    if (d_ < 1) throw std::invalid_argument("Partition: d must be positive");
    if (static_cast<int>(rows_.size()) > d_)
        throw std::invalid_argument("Partition: more rows than d");
    rows_.resize(static_cast<std::size_t>(d_), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) throw std::invalid_argument("Partition: negative row");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("Partition: rows must be weakly decreasing");
    }
}

Partition Partition::one_box(int d) {
    std::vector<int> rows(static_cast<std::size_t>(d), 0);
    rows[0] = 1;
    return Partition(d, std::move(rows));
}

Partition Partition::parse(int d, std::string_view text) {
    std::vector<int> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece =
            comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (piece.empty()) throw std::invalid_argument("Partition: empty row entry");
        rows.push_back(std::stoi(std::string(piece)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Partition(d, std::move(rows));
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<int> Partition::bar() const {
    std::vector<int> out(rows_.size());
    for (int i = 1; i <= d_; ++i) out[static_cast<std::size_t>(i) - 1] = row(i) + (d_ - i + 1);
    return out;
}

std::vector<int> Partition::to_subset(int n) const {
    if (!in_rectangle(n))
        throw NotInRectangle("Partition " + to_string() + " is not inside the " +
                             std::to_string(d_) + "x" + std::to_string(n - d_) + " rectangle");
    std::vector<int> bar_entries = bar();
    std::vector<int> out(bar_entries.size());
    // bar is strictly decreasing, so n+1-bar is already increasing.
    for (std::size_t i = 0; i < bar_entries.size(); ++i) out[i] = n + 1 - bar_entries[i];
    return out;
}

Partition Partition::from_bar(int d, std::vector<int> bar_entries) {
    std::sort(bar_entries.begin(), bar_entries.end(), std::greater<int>());
    std::vector<int> rows(bar_entries.size());
    for (int i = 1; i <= d; ++i)
        rows[static_cast<std::size_t>(i) - 1] = bar_entries[static_cast<std::size_t>(i) - 1] - (d - i + 1);
    return Partition(d, std::move(rows));
}

bool Partition::contains(const Partition& inner) const {
    if (d_ != inner.d_) throw std::invalid_argument("Partition::contains: mismatched d");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i] < inner.rows_[i]) return false;
    return true;
}

std::vector<Partition> Partition::covers_adding_one_box() const {
    std::vector<Partition> out;
    for (int i = 1; i <= d_; ++i) {
        if (i == 1 || row(i) < row(i - 1)) {
            std::vector<int> rows = rows_;
            rows[static_cast<std::size_t>(i) - 1] += 1;
            out.emplace_back(d_, std::move(rows));
        }
    }
    return out;
}

std::vector<Partition> Partition::lower_set() const {
    std::set<Partition> seen;
    std::vector<int> entries = bar();
    std::set<int> taken(entries.begin(), entries.end());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (int replacement = 1; replacement < entries[i]; ++replacement) {
            if (taken.count(replacement)) continue;
            std::vector<int> candidate = entries;
            candidate[i] = replacement;
            seen.insert(from_bar(d_, std::move(candidate)));
        }
    }
    return {seen.begin(), seen.end()};
}

std::strong_ordering Partition::operator<=>(const Partition& rhs) const {
    if (int c = size() - rhs.size(); c != 0) return c <=> 0;
    // Same size: larger rows lexicographically come first.
    if (rows_ == rhs.rows_) return d_ <=> rhs.d_;
    return rows_ > rhs.rows_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(rows_[i]);
    }
    return out + "]";
}

namespace {

void enumerate_rows(int d, int remaining, int row_cap, std::vector<int>& current,
                    std::vector<Partition>& out) {
    if (static_cast<int>(current.size()) == d) {
        out.emplace_back(d, current);
        return;
    }
    for (int b = std::min(remaining, row_cap); b >= 0; --b) {
        current.push_back(b);
        enumerate_rows(d, remaining - b, b, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int d, int max_size, int max_cols) {
    if (max_size < 0) throw std::invalid_argument("enumerate_partitions: negative max_size");
    std::vector<Partition> out;
    int cap = max_cols < 0 ? max_size : std::min(max_size, max_cols);
    std::vector<int> current;
    enumerate_rows(d, max_size, cap, current, out);
    // Recursion order is lex-decreasing but not grouped by size.
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wschur
