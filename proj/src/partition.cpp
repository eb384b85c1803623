#include "hcenter/partition.hpp"

#include <algorithm>
#include <numeric>

#include "hcenter/errors.hpp"

namespace hcenter {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int i) const {
    if (i < 1) throw DomainError("partition part index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool canonical_less(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> t;
    for (int j = 1; j <= lambda.part(1); ++j) {
        int count = 0;
        for (int p : lambda.parts()) count += p >= j ? 1 : 0;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

Partition embed(const Partition& mu, int n) {
    if (n < mu.size()) throw DomainError("embed: n smaller than |mu|");
    std::vector<int> p = mu.parts();
    p.insert(p.end(), static_cast<size_t>(n - mu.size()), 1);
    return Partition(std::move(p));
}

InterlacingPair interlacing_sequences(const Partition& lambda) {
    InterlacingPair r;
    int l = lambda.length();
    // Row i (1-based) accepts a new cell iff it is strictly shorter than row
    // i-1; row l+1 always does. The new cell (i, lambda_i + 1) has content
    // lambda_i + 1 - i.
    for (int i = 1; i <= l + 1; ++i)
        if (i == 1 || lambda.part(i) < lambda.part(i - 1))
            r.xs.push_back(lambda.part(i) + 1 - i);
    // Row i loses its last cell iff it is strictly longer than row i+1; the
    // cell (i, lambda_i) has content lambda_i - i.
    for (int i = 1; i <= l; ++i)
        if (lambda.part(i) > lambda.part(i + 1)) r.ys.push_back(lambda.part(i) - i);
    std::sort(r.xs.begin(), r.xs.end());
    std::sort(r.ys.begin(), r.ys.end());
    return r;
}

Partition grow(const Partition& lambda, int i) {
    auto seq = interlacing_sequences(lambda);
    if (i < 1 || i > static_cast<int>(seq.xs.size()))
        throw DomainError("grow: index outside the addable-corner list");
    int content = seq.xs[i - 1];
    std::vector<int> p = lambda.parts();
    // The addable corner of this content sits in row lambda_row + 1 - content
    // shifted: solve lambda_r + 1 - r = content over valid rows.
    for (int r = 1; r <= lambda.length() + 1; ++r) {
        if (lambda.part(r) + 1 - r == content &&
            (r == 1 || lambda.part(r) < lambda.part(r - 1))) {
            if (r == lambda.length() + 1)
                p.push_back(1);
            else
                p[r - 1] += 1;
            return Partition(std::move(p));
        }
    }
    throw DomainError("grow: no addable corner with the requested content");
}

Partition shrink(const Partition& lambda, int i) {
    auto seq = interlacing_sequences(lambda);
    if (i < 1 || i > static_cast<int>(seq.ys.size()))
        throw DomainError("shrink: index outside the removable-corner list");
    int content = seq.ys[i - 1];
    std::vector<int> p = lambda.parts();
    for (int r = 1; r <= lambda.length(); ++r) {
        if (lambda.part(r) - r == content && lambda.part(r) > lambda.part(r + 1)) {
            p[r - 1] -= 1;
            if (p[r - 1] == 0) p.pop_back();
            return Partition(std::move(p));
        }
    }
    throw DomainError("shrink: no removable corner with the requested content");
}

Integer hook_product(const Partition& lambda) {
    Partition t = conjugate(lambda);
    Integer h = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            h *= (lambda.part(i) - j) + (t.part(j) - i) + 1;
    return h;
}

std::vector<int> content_multiset(const Partition& lambda) {
    std::vector<int> c;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) c.push_back(j - i);
    std::sort(c.begin(), c.end());
    return c;
}

namespace {

void emit_partitions(int n, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

std::vector<Partition> partitions_up_to(int d) {
    if (d < 0) throw DomainError("partitions_up_to: negative bound");
    std::vector<Partition> out;
    for (int n = 0; n <= d; ++n) {
        auto layer = partitions_of(n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string to_string(const Partition& lambda) {
    std::string s = "(";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambda.parts()[i]);
    }
    s += ")";
    return s;
}

}  // namespace hcenter
