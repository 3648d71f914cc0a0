#include "glvar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glvar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::fits_inside(const Partition& other) const {
    if (rows() > other.rows())
        return false;
    for (int i = 0; i < rows(); ++i)
        if (parts_[static_cast<size_t>(i)] > other.part(i))
            return false;
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return {};
    std::vector<int> out(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++out[static_cast<size_t>(j)];
    return Partition(std::move(out));
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (auto c = size_ <=> o.size_; c != 0)
        return c;
    return parts_ <=> o.parts_;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

PartitionTuple::PartitionTuple(std::vector<Partition> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

bool PartitionTuple::is_pure() const {
    // canonical order puts the empty partition last
    return entries_.empty() || !entries_.back().empty();
}

int PartitionTuple::degree() const {
    return entries_.empty() ? 0 : entries_.front().size();
}

int PartitionTuple::multiplicity(const Partition& p) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), p));
}

std::string PartitionTuple::str() const {
    std::string s = "[";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ',';
        s += entries_[i].str();
    }
    return s + "]";
}

Magnitude::Magnitude(std::vector<long> counts) : counts_(std::move(counts)) {
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
    for (long c : counts_)
        if (c < 0)
            throw std::invalid_argument("magnitude counts must be non-negative");
}

std::string Magnitude::str() const {
    std::string s = "(";
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(counts_[i]);
    }
    return s + ")";
}

Magnitude magnitude(const PartitionTuple& t) {
    std::vector<long> counts;
    for (const Partition& p : t.entries()) {
        if (p.size() >= static_cast<int>(counts.size()))
            counts.resize(static_cast<size_t>(p.size()) + 1, 0);
        ++counts[static_cast<size_t>(p.size())];
    }
    return Magnitude(std::move(counts));
}

std::strong_ordering compare_magnitude(const Magnitude& a, const Magnitude& b) {
    int n = static_cast<int>(std::max(a.counts().size(), b.counts().size()));
    for (int i = n - 1; i >= 0; --i) {
        if (auto c = a.at(i) <=> b.at(i); c != 0)
            return c;
    }
    return std::strong_ordering::equal;
}

Magnitude magnitude_sum(const Magnitude& a, const Magnitude& b) {
    std::vector<long> counts(std::max(a.counts().size(), b.counts().size()), 0);
    for (size_t i = 0; i < counts.size(); ++i)
        counts[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
    return Magnitude(std::move(counts));
}

bool contains(const PartitionTuple& big, const PartitionTuple& small) {
    // both sorted descending; greedy two-pointer multiset inclusion
    size_t i = 0;
    for (const Partition& p : small.entries()) {
        while (i < big.entries().size() && big.entries()[i] > p)
            ++i;
        if (i >= big.entries().size() || big.entries()[i] != p)
            return false;
        ++i;
    }
    return true;
}

PartitionTuple tuple_union(const PartitionTuple& a, const PartitionTuple& b) {
    std::vector<Partition> out = a.entries();
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return PartitionTuple(std::move(out));
}

PartitionTuple tuple_minus(const PartitionTuple& a, const PartitionTuple& b) {
    if (!contains(a, b))
        throw std::invalid_argument("tuple_minus: minuend does not contain subtrahend");
    std::vector<Partition> out;
    size_t i = 0;
    const auto& bs = b.entries();
    for (const Partition& p : a.entries()) {
        if (i < bs.size() && bs[i] == p)
            ++i;
        else
            out.push_back(p);
    }
    return PartitionTuple(std::move(out));
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in " + what, pos);
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int integer() {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') {
            neg = true;
            ++pos;
        }
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected an integer", start);
        long v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000)
                throw ParseError("integer too large", start);
            ++pos;
        }
        return static_cast<int>(neg ? -v : v);
    }
    void done(const char* what) {
        skip_ws();
        if (pos != s.size())
            throw ParseError(std::string("trailing input after ") + what, pos);
    }
};

Partition parse_partition_body(Cursor& c) {
    size_t open = c.pos;
    c.expect('[', "partition");
    std::vector<int> parts;
    if (!c.eat(']')) {
        do {
            parts.push_back(c.integer());
        } while (c.eat(','));
        c.expect(']', "partition");
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), open);
    }
}

} // namespace

Partition parse_partition(std::string_view text) {
    Cursor c{text};
    Partition p = parse_partition_body(c);
    c.done("partition");
    return p;
}

PartitionTuple parse_tuple(std::string_view text) {
    Cursor c{text};
    c.expect('[', "tuple");
    std::vector<Partition> entries;
    if (!c.eat(']')) {
        do {
            entries.push_back(parse_partition_body(c));
        } while (c.eat(','));
        c.expect(']', "tuple");
    }
    c.done("tuple");
    return PartitionTuple(std::move(entries));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    return out;
}

std::vector<PartitionTuple> subtuples(const PartitionTuple& t) {
    // distinct entries with multiplicities
    std::vector<std::pair<Partition, int>> dist;
    for (const Partition& p : t.entries()) {
        if (!dist.empty() && dist.back().first == p)
            ++dist.back().second;
        else
            dist.emplace_back(p, 1);
    }
    std::vector<PartitionTuple> out;
    std::vector<Partition> acc;
    // odometer over multiplicity choices
    std::vector<int> take(dist.size(), 0);
    for (;;) {
        acc.clear();
        for (size_t i = 0; i < dist.size(); ++i)
            for (int k = 0; k < take[i]; ++k)
                acc.push_back(dist[i].first);
        out.emplace_back(acc);
        size_t i = 0;
        while (i < dist.size() && take[i] == dist[i].second)
            take[i++] = 0;
        if (i == dist.size())
            break;
        ++take[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace glvar
