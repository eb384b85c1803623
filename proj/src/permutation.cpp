#include "hcenter/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hcenter/errors.hpp"

namespace hcenter {

Permutation::Permutation(int n) {
    if (n < 0) throw DomainError("permutation degree must be nonnegative");
    img_.resize(n);
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 1 || v > static_cast<int>(images.size()) || seen[v - 1])
            throw DomainError("image list is not a permutation");
        seen[v - 1] = 1;
    }
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw DomainError("transposition points must be distinct and within 1..n");
    Permutation p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::adjacent(int n, int i) {
    if (i < 1 || i >= n) throw DomainError("adjacent transposition index out of range");
    return transposition(n, i, i + 1);
}

int Permutation::operator()(int x) const {
    if (x < 1 || x > degree()) throw DomainError("permutation applied outside its domain");
    return img_[x - 1];
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (degree() != o.degree()) throw DomainError("composing permutations of different degree");
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i] - 1];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i] - 1] = static_cast<int>(i) + 1;
    return r;
}

Permutation Permutation::promote(int m) const {
    if (m < degree()) throw DomainError("promote target below current degree");
    Permutation r = *this;
    for (int v = degree() + 1; v <= m; ++v) r.img_.push_back(v);
    return r;
}

Permutation Permutation::restrict_to(int k) const {
    if (k < 0 || k > degree() || !fixes_above(k))
        throw DomainError("restriction requires the upper points to be fixed");
    Permutation r = *this;
    r.img_.resize(k);
    return r;
}

bool Permutation::fixes_above(int k) const {
    for (int v = k + 1; v <= degree(); ++v)
        if (img_[v - 1] != v) return false;
    return true;
}

bool Permutation::is_identity() const { return fixes_above(0); }

Partition Permutation::cycle_type() const {
    std::vector<char> seen(img_.size(), 0);
    std::vector<int> cycles;
    for (int s = 1; s <= degree(); ++s) {
        if (seen[s - 1]) continue;
        int len = 0;
        for (int x = s; !seen[x - 1]; x = img_[x - 1]) {
            seen[x - 1] = 1;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    return Partition(std::move(cycles));
}

Permutation longest_element(int n) {
    std::vector<int> img(n);
    for (int i = 1; i <= n; ++i) img[i - 1] = n + 1 - i;
    return Permutation::from_images(std::move(img));
}

Permutation t_mu(const Partition& mu) {
    int k = mu.size();
    Permutation p(k);
    std::vector<int> img = p.images();
    int offset = 0;
    // Block {offset+1..offset+part} carries the descending cycle
    // offset+part -> offset+part-1 -> ... -> offset+1 -> offset+part.
    for (int part : mu.parts()) {
        for (int j = 2; j <= part; ++j) img[offset + j - 1] = offset + j - 1;
        img[offset] = offset + part;
        offset += part;
    }
    return Permutation::from_images(std::move(img));
}

Permutation t_mu_n(const Partition& mu, int n) {
    if (n < mu.size()) throw DomainError("t_mu_n: n smaller than |mu|");
    Permutation w0 = longest_element(n);
    return w0 * t_mu(mu).promote(n) * w0;
}

Permutation t_single(int i, int m) {
    if (i < 1 || i > m) throw DomainError("t_single index out of range");
    Permutation p(m);
    for (int j = m - i + 1; j <= m - 1; ++j) p = p * Permutation::adjacent(m, j);
    return p;
}

std::vector<Permutation> lambda_cosets(int n, int k) {
    if (k < 0 || k > n) throw DomainError("lambda_cosets requires 0 <= k <= n");
    std::vector<Permutation> out{Permutation(n)};
    for (int j = n; j > k; --j) {
        std::vector<Permutation> next;
        next.reserve(out.size() * j);
        for (const auto& g : out)
            for (int i = 1; i <= j; ++i) next.push_back(g * t_single(i, j).promote(n));
        out = std::move(next);
    }
    return out;
}

std::pair<Permutation, Permutation> coset_factor(const Permutation& h, int k) {
    int b = h.degree();
    if (k < 0 || k > b) throw DomainError("coset_factor requires 0 <= k <= degree");
    // Positions sent into {1..k}, in increasing order; u routes them to
    // 1..k in order and copies h elsewhere, so u^{-1} is increasing on 1..k.
    std::vector<int> pos;
    for (int q = 1; q <= b; ++q)
        if (h(q) <= k) pos.push_back(q);
    std::vector<int> uimg(b), ximg(k);
    for (int q = 1; q <= b; ++q) uimg[q - 1] = h(q);
    for (int j = 1; j <= k; ++j) {
        uimg[pos[j - 1] - 1] = j;
        ximg[j - 1] = h(pos[j - 1]);
    }
    return {Permutation::from_images(std::move(ximg)),
            Permutation::from_images(std::move(uimg))};
}

std::vector<Permutation> minimal_right_reps(int b, int k) {
    if (k < 0 || k > b) throw DomainError("minimal_right_reps requires 0 <= k <= b");
    std::vector<Permutation> out;
    for (const auto& g : all_permutations(b)) {
        auto [x, u] = coset_factor(g, k);
        if (x.is_identity() && u == g) out.push_back(g);
    }
    return out;
}

std::vector<int> reduced_word(const Permutation& p) {
    std::vector<int> word;
    Permutation q = p;
    bool found = true;
    while (found) {
        found = false;
        for (int i = 1; i < q.degree(); ++i) {
            if (q(i) > q(i + 1)) {
                q = q * Permutation::adjacent(q.degree(), i);
                word.push_back(i);
                found = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::string to_string(const Permutation& p) {
    std::string s = "[";
    for (int i = 0; i < p.degree(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.images()[i]);
    }
    return s + "]";
}

}  // namespace hcenter
