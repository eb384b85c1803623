#include "hcenter/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

#include <json.hpp>

#include "hcenter/errors.hpp"

namespace hcenter {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MemoKey, long long> g_mn_memo;
std::mutex g_mn_lock;

// Murnaghan-Nakayama on beta-sets: beta_i = lambda_i + L - i is a strictly
// decreasing set; removing a border strip of size r moves one beta number
// from b to b - r, legal iff b - r is not already occupied. The strip
// height parity is the number of beta numbers strictly between b - r and b.
long long mn_recurse(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (lambda.empty()) return 1;
    MemoKey key{lambda, mu};
    {
        std::lock_guard<std::mutex> g(g_mn_lock);
        auto it = g_mn_memo.find(key);
        if (it != g_mn_memo.end()) return it->second;
    }
    int L = static_cast<int>(lambda.size());
    int r = mu[0];
    std::vector<int> beta(L);
    for (int i = 1; i <= L; ++i) beta[i - 1] = lambda[i - 1] + L - i;
    std::vector<int> rest(mu.begin() + 1, mu.end());
    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i];
        if (b < r) continue;
        int target = b - r;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = target;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlambda;
        for (int j = 1; j <= L; ++j) {
            int part = nbeta[j - 1] - (L - j);
            if (part > 0) nlambda.push_back(part);
        }
        long long term = mn_recurse(nlambda, rest);
        total += (height % 2 == 0) ? term : -term;
    }
    std::lock_guard<std::mutex> g(g_mn_lock);
    g_mn_memo.emplace(std::move(key), total);
    return total;
}

std::filesystem::path cache_dir() {
    const char* env = std::getenv("HCENTER_CACHE_DIR");
    return env && *env ? std::filesystem::path(env)
                       : std::filesystem::path(".hcenter-cache");
}

std::shared_ptr<CharacterTable> compute_table(int n) {
    auto t = std::make_shared<CharacterTable>();
    t->n = n;
    t->order = partitions_of(n);
    size_t m = t->order.size();
    t->chi.assign(m, std::vector<long long>(m, 0));
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b)
            t->chi[a][b] = character(t->order[a], t->order[b]);
    return t;
}

nlohmann::json table_to_json(const CharacterTable& t) {
    nlohmann::json j;
    j["n"] = t.n;
    auto order = nlohmann::json::array();
    for (const auto& p : t.order) order.push_back(p.parts());
    j["order"] = std::move(order);
    auto table = nlohmann::json::array();
    for (const auto& row : t.chi) {
        auto jrow = nlohmann::json::array();
        for (long long v : row) jrow.push_back(std::to_string(v));
        table.push_back(std::move(jrow));
    }
    j["table"] = std::move(table);
    return j;
}

std::shared_ptr<CharacterTable> table_from_json(const nlohmann::json& j) {
    auto t = std::make_shared<CharacterTable>();
    t->n = j.at("n").get<int>();
    for (const auto& jp : j.at("order"))
        t->order.push_back(Partition(jp.get<std::vector<int>>()));
    for (const auto& jrow : j.at("table")) {
        std::vector<long long> row;
        for (const auto& jv : jrow) row.push_back(std::stoll(jv.get<std::string>()));
        t->chi.push_back(std::move(row));
    }
    size_t m = t->order.size();
    if (t->order != partitions_of(t->n) || t->chi.size() != m)
        throw Error("character table cache is malformed");
    for (const auto& row : t->chi)
        if (row.size() != m) throw Error("character table cache is malformed");
    return t;
}

void write_table(const CharacterTable& t) {
    std::error_code ec;
    auto dir = cache_dir();
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // cache is best effort
    auto path = dir / ("chartab_" + std::to_string(t.n) + ".json");
    auto tmp = dir / ("chartab_" + std::to_string(t.n) + ".json.tmp");
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << table_to_json(t).dump();
    }
    std::filesystem::rename(tmp, path, ec);
}

std::shared_ptr<CharacterTable> read_table(int n) {
    auto path = cache_dir() / ("chartab_" + std::to_string(n) + ".json");
    std::ifstream in(path);
    if (!in) return nullptr;
    try {
        nlohmann::json j;
        in >> j;
        auto t = table_from_json(j);
        return t->n == n ? t : nullptr;
    } catch (const std::exception&) {
        return nullptr;  // unreadable cache entries are recomputed
    }
}

std::map<int, std::shared_ptr<const CharacterTable>> g_tables;
std::mutex g_tables_lock;

std::shared_ptr<const CharacterTable> table_impl(int n, bool verify_disk) {
    if (n < 0) throw DomainError("character table of negative degree");
    {
        std::lock_guard<std::mutex> g(g_tables_lock);
        auto it = g_tables.find(n);
        if (it != g_tables.end() && !verify_disk) return it->second;
    }
    std::shared_ptr<const CharacterTable> result;
    auto disk = read_table(n);
    if (disk && !verify_disk) {
        result = disk;
    } else if (disk && verify_disk) {
        auto fresh = compute_table(n);
        if (fresh->order != disk->order || fresh->chi != disk->chi)
            throw Error("character table cache disagrees with recomputation for n=" +
                        std::to_string(n));
        result = fresh;
    } else {
        auto fresh = compute_table(n);
        write_table(*fresh);
        result = fresh;
    }
    std::lock_guard<std::mutex> g(g_tables_lock);
    g_tables[n] = result;
    return result;
}

bool verify_env_set() {
    const char* env = std::getenv("HCENTER_CACHE_VERIFY");
    return env && *env;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw DomainError("character requires |lambda| = |mu|");
    return mn_recurse(lambda.parts(), mu.parts());
}

Integer dim_irrep(const Partition& lambda) {
    Integer d;
    mpz_divexact(d.get_mpz_t(), factorial(lambda.size()).get_mpz_t(),
                 hook_product(lambda).get_mpz_t());
    return d;
}

int CharacterTable::index_of(const Partition& p) const {
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == p) return static_cast<int>(i);
    throw DomainError("partition not in character table order");
}

std::shared_ptr<const CharacterTable> character_table(int n) {
    return table_impl(n, verify_env_set());
}

std::shared_ptr<const CharacterTable> character_table_verified(int n) {
    return table_impl(n, true);
}

Integer z_of(const Partition& full_type) {
    Integer z = 1;
    int prev = 0, mult = 0;
    for (int i = full_type.length(); i >= 1; --i) {
        int p = full_type.part(i);
        if (p == prev)
            ++mult;
        else {
            prev = p;
            mult = 1;
        }
        z *= Integer(p) * mult;
    }
    return z;
}

Integer centralizer_order(const Partition& mu, int n) {
    return z_of(embed(mu, n));
}

Integer class_size(const Partition& full_type) {
    Integer s;
    mpz_divexact(s.get_mpz_t(), factorial(full_type.size()).get_mpz_t(),
                 z_of(full_type).get_mpz_t());
    return s;
}

CentralElement CentralElement::identity(int n) {
    CentralElement e(n);
    e.add_coeff(Partition(std::vector<int>(n, 1)), 1);
    return e;
}

CentralElement::CentralElement(const CentralElement& o) : n_(o.n_) {
    std::lock_guard<std::mutex> g(o.lock_);
    coeffs_ = o.coeffs_;
    eigen_ = o.eigen_;
}

CentralElement& CentralElement::operator=(const CentralElement& o) {
    if (this == &o) return *this;
    CentralElement tmp(o);
    std::lock_guard<std::mutex> g(lock_);
    n_ = tmp.n_;
    coeffs_ = std::move(tmp.coeffs_);
    eigen_ = std::move(tmp.eigen_);
    return *this;
}

void CentralElement::add_coeff(const Partition& full_type, const Rational& c) {
    if (full_type.size() != n_)
        throw DomainError("class coefficient key must be a partition of n");
    if (c == 0) return;
    std::lock_guard<std::mutex> g(lock_);
    eigen_.reset();
    auto it = coeffs_.find(full_type);
    if (it == coeffs_.end())
        coeffs_.emplace(full_type, c);
    else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Rational CentralElement::coeff(const Partition& full_type) const {
    auto it = coeffs_.find(full_type);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::shared_ptr<const std::map<Partition, Rational, CanonicalLess>>
CentralElement::eigenvalues() const {
    {
        std::lock_guard<std::mutex> g(lock_);
        if (eigen_) return eigen_;
    }
    auto table = character_table(n_);
    auto eig = std::make_shared<std::map<Partition, Rational, CanonicalLess>>();
    for (size_t a = 0; a < table->order.size(); ++a) {
        const Partition& lambda = table->order[a];
        Rational sum = 0;
        for (const auto& [mu, c] : coeffs_)
            sum += c * Rational(class_size(mu)) * rat(table->chi[a][table->index_of(mu)]);
        (*eig)[lambda] = sum / Rational(dim_irrep(lambda));
    }
    std::lock_guard<std::mutex> g(lock_);
    eigen_ = eig;
    return eigen_;
}

CentralElement CentralElement::operator+(const CentralElement& o) const {
    if (n_ != o.n_) throw DomainError("adding central elements of different degree");
    CentralElement r = *this;
    for (const auto& [t, c] : o.coeffs_) r.add_coeff(t, c);
    return r;
}

CentralElement CentralElement::operator-(const CentralElement& o) const {
    return *this + o.scaled(-1);
}

CentralElement CentralElement::scaled(const Rational& c) const {
    CentralElement r(n_);
    if (c == 0) return r;
    for (const auto& [t, a] : coeffs_) r.coeffs_.emplace(t, a * c);
    return r;
}

CentralElement class_sum(const Partition& mu, int n) {
    if (mu.size() > n) throw DomainError("class_sum: |mu| exceeds n");
    CentralElement e(n);
    e.add_coeff(embed(mu, n), 1);
    return e;
}

CentralElement normalized_class_sum(const Partition& mu, int n) {
    if (mu.size() > n) return CentralElement::zero(n);
    Rational scale = Rational(centralizer_order(mu, n)) /
                     Rational(factorial(n - mu.size()));
    return class_sum(mu, n).scaled(scale);
}

Rational normalized_character(const Partition& lambda, const CentralElement& x) {
    int n = lambda.size();
    if (x.degree() > n)
        throw DomainError("normalized_character: element degree exceeds |lambda|");
    Rational sum = 0;
    for (const auto& [mu, c] : x.class_coeffs())
        sum += c * Rational(class_size(mu)) * rat(character(lambda, embed(mu, n)));
    return sum / Rational(dim_irrep(lambda));
}

CentralElement central_multiply(const CentralElement& a, const CentralElement& b) {
    if (a.degree() != b.degree())
        throw DomainError("multiplying central elements of different degree");
    auto ea = a.eigenvalues();
    auto eb = b.eigenvalues();
    std::map<Partition, Rational, CanonicalLess> prod;
    for (const auto& [lambda, va] : *ea) prod[lambda] = va * eb->at(lambda);
    return central_from_eigenvalues(a.degree(), prod);
}

CentralElement central_from_eigenvalues(
    int n, const std::map<Partition, Rational, CanonicalLess>& eigen) {
    auto table = character_table(n);
    CentralElement r(n);
    Rational nfact(factorial(n));
    // Column orthogonality: c_nu = (1/n!) sum_lambda d_lambda chi^lambda(nu)
    // chihat^lambda(x).
    for (size_t b = 0; b < table->order.size(); ++b) {
        const Partition& nu = table->order[b];
        Rational c = 0;
        for (size_t a = 0; a < table->order.size(); ++a) {
            auto it = eigen.find(table->order[a]);
            if (it == eigen.end()) continue;
            c += Rational(dim_irrep(table->order[a])) * rat(table->chi[a][b]) * it->second;
        }
        r.add_coeff(nu, c / nfact);
    }
    return r;
}

CentralElement from_group_algebra(const GroupAlgebraElement& x) {
    if (!x.is_central())
        throw Error("group algebra element is not central");
    CentralElement r(x.degree());
    std::map<Partition, Rational, CanonicalLess> seen;
    for (const auto& [g, c] : x.terms()) seen.emplace(g.cycle_type(), c);
    for (const auto& [t, c] : seen) r.add_coeff(t, c);
    return r;
}

GroupAlgebraElement to_group_algebra(const CentralElement& x) {
    if (x.degree() > 8)
        throw DomainError("explicit class sums are supported only for small n");
    GroupAlgebraElement r(x.degree());
    for (const auto& g : all_permutations(x.degree())) {
        Rational c = x.coeff(g.cycle_type());
        if (c != 0) r.add_term(g, c);
    }
    return r;
}

CentralElement jm_projected_power(int k, int n) {
    if (k < 0 || n < 0) throw DomainError("jm_projected_power needs k, n >= 0");
    GroupAlgebraElement p = jucys_murphy(n + 1, n + 1).power(k);
    return from_group_algebra(p.projected_to(n));
}

CentralElement jm_conjugated_sum(int k, int n) {
    if (k < 0 || n < 1) throw DomainError("jm_conjugated_sum needs k >= 0, n >= 1");
    GroupAlgebraElement jk = jucys_murphy(n, n).power(k);
    GroupAlgebraElement total(n);
    for (int i = 1; i <= n; ++i) {
        Permutation g(n);
        for (int j = i; j <= n - 1; ++j) g = g * Permutation::adjacent(n, j);
        total = total + jk.conjugated_by(g);
    }
    return from_group_algebra(total);
}

CentralElement young_idempotent_closure_vector(const Partition& lambda) {
    int n = lambda.size();
    CentralElement r(n);
    Rational nfact(factorial(n));
    for (const auto& mu : partitions_of(n))
        r.add_coeff(mu, rat(character(lambda, mu)) / nfact);
    return r;
}

}  // namespace hcenter
