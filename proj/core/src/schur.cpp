#include "glvar/schur.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace glvar {

namespace {

// ---- Littlewood-Richardson via skew tableau backtracking ----

struct LrState {
    const std::vector<int>& lam;
    const std::vector<int>& mu; // padded to lam's length
    const std::vector<int>& nu;
    std::vector<std::vector<int>> fill; // fill[i][j] for mu[i] <= j < lam[i]
    std::vector<int> used;              // content counts so far
    long long count = 0;
};

// Cells are visited in reverse reading order (top row to bottom row,
// right to left within a row) so the lattice-word condition can be
// checked as each entry is placed.
void lr_search(LrState& st, int row, int col) {
    const int nrows = static_cast<int>(st.lam.size());
    if (row == nrows) {
        ++st.count;
        return;
    }
    if (col < st.mu[static_cast<size_t>(row)]) {
        lr_search(st, row + 1, row + 1 < nrows ? st.lam[static_cast<size_t>(row) + 1] - 1 : 0);
        return;
    }
    const int maxval = static_cast<int>(st.nu.size());
    for (int v = 1; v <= maxval; ++v) {
        if (st.used[static_cast<size_t>(v)] >= st.nu[static_cast<size_t>(v) - 1])
            continue; // content exhausted
        // row weakly increasing: right neighbor already placed
        if (col + 1 < st.lam[static_cast<size_t>(row)] &&
            v > st.fill[static_cast<size_t>(row)][static_cast<size_t>(col) + 1])
            continue;
        // column strictly increasing: cell above placed in an earlier row
        if (row > 0 && col < st.lam[static_cast<size_t>(row) - 1] &&
            col >= st.mu[static_cast<size_t>(row) - 1] &&
            v <= st.fill[static_cast<size_t>(row) - 1][static_cast<size_t>(col)])
            continue;
        // lattice word: prefix count of v stays <= count of v-1
        if (v > 1 && st.used[static_cast<size_t>(v)] + 1 > st.used[static_cast<size_t>(v) - 1])
            continue;
        st.fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
        ++st.used[static_cast<size_t>(v)];
        if (col > st.mu[static_cast<size_t>(row)])
            lr_search(st, row, col - 1);
        else
            lr_search(st, row + 1, row + 1 < nrows ? st.lam[static_cast<size_t>(row) + 1] - 1 : 0);
        --st.used[static_cast<size_t>(v)];
    }
}

long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size())
        return 0;
    if (!mu.fits_inside(lam) || !nu.fits_inside(lam))
        return 0;
    if (nu.empty())
        return mu == lam ? 1 : 0;
    std::vector<int> l = lam.parts();
    std::vector<int> m(l.size(), 0);
    for (size_t i = 0; i < mu.parts().size(); ++i)
        m[i] = mu.parts()[i];
    LrState st{l, m, nu.parts(), {}, std::vector<int>(nu.rows() + 1, 0), 0};
    st.fill.resize(l.size());
    for (size_t i = 0; i < l.size(); ++i)
        st.fill[i].resize(static_cast<size_t>(l[i]), 0);
    lr_search(st, 0, l.empty() ? 0 : l[0] - 1);
    return st.count;
}

std::shared_mutex lr_memo_mutex;
std::map<std::tuple<Partition, Partition, Partition>, long long> lr_memo;

// ---- Murnaghan-Nakayama via beta-numbers ----

std::shared_mutex chi_memo_mutex;
std::map<std::pair<Partition, std::vector<int>>, long long> chi_memo;

long long chi_rec(const Partition& lam, const std::vector<int>& mu_rest) {
    if (lam.empty())
        return mu_rest.empty() ? 1 : 0;
    if (mu_rest.empty())
        return 0;
    {
        std::shared_lock lk(chi_memo_mutex);
        auto it = chi_memo.find({lam, mu_rest});
        if (it != chi_memo.end())
            return it->second;
    }
    const int k = mu_rest.front();
    std::vector<int> rest(mu_rest.begin() + 1, mu_rest.end());
    // beta-numbers: b_i = lam_i + (len-1-i), strictly decreasing
    const int len = lam.rows();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<size_t>(i)] = lam.part(i) + (len - 1 - i);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[static_cast<size_t>(i)] - k;
        if (b < 0)
            continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i)
                continue;
            if (beta[static_cast<size_t>(j)] == b) {
                clash = true;
                break;
            }
            if (beta[static_cast<size_t>(j)] > b && beta[static_cast<size_t>(j)] < beta[static_cast<size_t>(i)])
                ++height;
        }
        if (clash)
            continue;
        // rebuild the partition from the modified beta-set
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(i)] = b;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> parts(static_cast<size_t>(len));
        for (int j = 0; j < len; ++j)
            parts[static_cast<size_t>(j)] = nb[static_cast<size_t>(j)] - (len - 1 - j);
        long long sub = chi_rec(Partition(std::move(parts)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::unique_lock lk(chi_memo_mutex);
    chi_memo.emplace(std::make_pair(lam, mu_rest), total);
    return total;
}

// ---- power-sum symmetric function arithmetic ----

// finitely supported map: index partition of p_mu -> rational coefficient
using PExpansion = std::map<Partition, mpq_class>;

mpz_class z_factor(const Partition& mu) {
    mpz_class z = 1;
    int run_val = -1, run_len = 0;
    auto flush = [&] {
        for (int j = 1; j <= run_len; ++j)
            z *= run_val, z *= j;
    };
    for (int p : mu.parts()) {
        if (p == run_val)
            ++run_len;
        else {
            flush();
            run_val = p;
            run_len = 1;
        }
    }
    flush();
    return z;
}

PExpansion schur_to_p(const Partition& lam) {
    PExpansion out;
    for (const Partition& mu : partitions_of(lam.size())) {
        long long chi = sym_group_character(lam, mu);
        if (chi != 0)
            out[mu] = mpq_class(static_cast<long>(chi)) / mpq_class(z_factor(mu));
    }
    return out;
}

PExpansion multiply(const PExpansion& a, const PExpansion& b, int degree_bound) {
    PExpansion out;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            if (ma.size() + mb.size() > degree_bound)
                continue;
            std::vector<int> parts = ma.parts();
            parts.insert(parts.end(), mb.parts().begin(), mb.parts().end());
            std::sort(parts.begin(), parts.end(), std::greater<>());
            mpq_class c = ca * cb;
            auto [it, fresh] = out.emplace(Partition(std::move(parts)), c);
            if (!fresh)
                it->second += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// p_m[f]: Q-algebra endomorphism sending p_j -> p_{m j}
PExpansion plethysm_by_power(int m, const PExpansion& f) {
    PExpansion out;
    for (const auto& [mu, c] : f) {
        std::vector<int> parts = mu.parts();
        for (int& p : parts)
            p *= m;
        out[Partition(std::move(parts))] += c;
    }
    return out;
}

// h_k[f] truncated at degree_bound; f homogeneous of positive degree
PExpansion plethysm_h(int k, const PExpansion& f, int degree_bound) {
    PExpansion out;
    if (k == 0) {
        out[Partition()] = 1;
        return out;
    }
    for (const Partition& mu : partitions_of(k)) {
        PExpansion term;
        term[Partition()] = mpq_class(1) / mpq_class(z_factor(mu));
        for (int part : mu.parts())
            term = multiply(term, plethysm_by_power(part, f), degree_bound);
        for (const auto& [m, c] : term)
            out[m] += c;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace

long long sym_group_character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("sym_group_character: |lam| != |mu|");
    return chi_rec(lam, mu.parts());
}

long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lam.size())
        return 0;
    // c is symmetric in mu, nu; canonicalize the key
    const Partition& a = mu <= nu ? mu : nu;
    const Partition& b = mu <= nu ? nu : mu;
    auto key = std::make_tuple(lam, a, b);
    {
        std::shared_lock lk(lr_memo_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end())
            return it->second;
    }
    long long c = lr_count(lam, a, b);
    std::unique_lock lk(lr_memo_mutex);
    lr_memo.emplace(key, c);
    return c;
}

long long schur_dim(const Partition& lam, int n) {
    if (n < 0)
        throw std::invalid_argument("schur_dim: negative n");
    if (lam.rows() > n)
        return 0;
    Partition conj = lam.conjugate();
    mpz_class num = 1, den = 1;
    for (int i = 0; i < lam.rows(); ++i) {
        for (int j = 0; j < lam.part(i); ++j) {
            num *= n + j - i;
            den *= lam.part(i) - j + conj.part(j) - i - 1; // hook length
        }
    }
    mpz_class q = num / den;
    if (q * den != num)
        throw std::logic_error("schur_dim: hook content product not integral");
    if (!q.fits_slong_p())
        throw std::overflow_error("schur_dim: dimension exceeds long");
    return q.get_si();
}

long long SchurExpansion::dimension(int n) const {
    long long total = 0;
    for (const auto& [lam, mult] : terms)
        total += mult * schur_dim(lam, n);
    return total;
}

SchurExpansion sym_decompose(const PartitionTuple& t, int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("sym_decompose: negative degree bound");
    if (!t.is_pure())
        throw std::invalid_argument(
            "sym_decompose: tuple must be pure (degree-0 generators give "
            "infinite-dimensional graded pieces)");

    PExpansion acc;
    acc[Partition()] = 1;
    for (const Partition& lam : t.entries()) {
        PExpansion s = schur_to_p(lam);
        PExpansion sym_lam; // degree-<=D part of Sym(V_lam)
        for (int k = 0; k * lam.size() <= degree_bound; ++k) {
            PExpansion hk = plethysm_h(k, s, degree_bound);
            for (const auto& [m, c] : hk)
                sym_lam[m] += c;
        }
        acc = multiply(acc, sym_lam, degree_bound);
    }

    SchurExpansion out;
    out.degree_bound = degree_bound;
    // group by degree, convert to the Schur basis: <p_mu, s_nu> = chi^nu_mu
    for (int d = 0; d <= degree_bound; ++d) {
        for (const Partition& nu : partitions_of(d)) {
            mpq_class coeff = 0;
            for (const Partition& mu : partitions_of(d)) {
                auto it = acc.find(mu);
                if (it != acc.end())
                    coeff += it->second * static_cast<long>(sym_group_character(nu, mu));
            }
            if (coeff == 0)
                continue;
            if (coeff.get_den() != 1 || coeff < 0)
                throw std::logic_error("sym_decompose: non-integral or negative multiplicity");
            out.terms[nu] = coeff.get_num().get_si();
        }
    }
    return out;
}

} // namespace glvar
