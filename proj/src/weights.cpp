#include "fano/weights.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace fano {

std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

bool is_nonincreasing(const Weight& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

Weight rho(int n) {
    if (n < 1) throw Error("rho: rank must be >= 1");
    Weight r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = n - i;
    return r;
}

int inversion_count(const Weight& w) {
    int inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] < w[j]) ++inv;
    return inv;
}

BottRegularity bott_regularize(const Weight& w) {
    const int n = static_cast<int>(w.size());
    Weight s = w;
    const Weight r = rho(n);
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] += r[static_cast<size_t>(i)];

    Weight sorted = s;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) return BottRegularity{};

    BottRegularity out;
    out.singular = false;
    out.length = inversion_count(s);
    out.dominant.resize(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i)
        out.dominant[i] = sorted[i] - r[i];
    assert(is_nonincreasing(out.dominant));
    return out;
}

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact product of (num_f / den_f) factors known to multiply to an integer.
i64 exact_product(const std::vector<i64>& nums, const std::vector<i64>& dens, int sign) {
    u128 num = 1, den = 1;
    size_t di = 0;
    for (size_t i = 0; i < nums.size(); ++i) {
        num *= static_cast<u128>(nums[i]);
        while (di < dens.size() && den * static_cast<u128>(dens[di]) <= num) {
            den *= static_cast<u128>(dens[di]);
            ++di;
        }
        u128 g = gcd128(num, den);
        num /= g;
        den /= g;
        if (num > (u128(1) << 100)) throw Error("weyl_dim: intermediate overflow");
    }
    for (; di < dens.size(); ++di) {
        den *= static_cast<u128>(dens[di]);
        u128 g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw Error("weyl_dim: non-integral product");
    if (num > static_cast<u128>(std::numeric_limits<i64>::max()))
        throw Error("weyl_dim: result overflow");
    return sign * static_cast<i64>(num);
}

i64 weyl_product(const Weight& w, bool allow_nonpositive) {
    const int n = static_cast<int>(w.size());
    std::vector<i64> nums, dens;
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            i64 f = static_cast<i64>(w[static_cast<size_t>(i)]) - w[static_cast<size_t>(j)] + (j - i);
            if (f == 0) return 0;
            if (f < 0) {
                if (!allow_nonpositive) throw Error("weyl_dim: weight not dominant");
                sign = -sign;
                f = -f;
            }
            nums.push_back(f);
            dens.push_back(j - i);
        }
    }
    return exact_product(nums, dens, sign);
}

} // namespace

i64 weyl_dim(const Weight& lambda) {
    if (lambda.empty()) return 1;
    if (!is_nonincreasing(lambda)) throw Error("weyl_dim: weight not dominant " + weight_to_string(lambda));
    i64 d = weyl_product(lambda, false);
    assert(d >= 1);
    return d;
}

i64 weyl_chi(const Weight& w) {
    if (w.empty()) return 1;
    return weyl_product(w, true);
}

namespace {

// DFS enumeration of Littlewood-Richardson skew tableaux of content mu on
// shapes nu containing lambda, with at most n rows. lambda, mu partitions.
struct LrEnumerator {
    int n;
    std::vector<int> lambda;      // padded to n
    std::vector<int> mu;          // values 1..m have mu[v-1] cells
    WeightMultiset out;

    std::vector<int> shape;                     // current nu
    std::vector<std::vector<int>> row_values;   // values of skew cells per row
    std::vector<int> placed;                    // count of each value placed
    std::vector<std::vector<int>> cum;          // cum[r][v] = #values (v+1) in rows 0..r

    void run() {
        shape = lambda;
        row_values.assign(static_cast<size_t>(n), {});
        placed.assign(mu.size(), 0);
        cum.assign(static_cast<size_t>(n) + 1, std::vector<int>(mu.size(), 0));
        fill_row(0);
    }

    int total_remaining() const {
        int t = 0;
        for (size_t v = 0; v < mu.size(); ++v) t += mu[v] - placed[v];
        return t;
    }

    void fill_row(int r) {
        if (r == n) {
            if (total_remaining() == 0) {
                Weight nu(shape.begin(), shape.end());
                out[nu] += 1;
            }
            return;
        }
        for (size_t v = 0; v < mu.size(); ++v)
            cum[static_cast<size_t>(r) + 1][v] = cum[static_cast<size_t>(r)][v];
        fill_cell(r, lambda[static_cast<size_t>(r)], 0);
    }

    // Column c is 0-based; cells of row r occupy columns [lambda_r, nu_r).
    void fill_cell(int r, int c, int last_value) {
        // Option: close this row here.
        {
            std::vector<int> saved = row_values[static_cast<size_t>(r)];
            int saved_shape = shape[static_cast<size_t>(r)];
            fill_row(r + 1);
            row_values[static_cast<size_t>(r)] = saved;
            shape[static_cast<size_t>(r)] = saved_shape;
        }
        // Row length cannot exceed the row above.
        if (r > 0 && c >= shape[static_cast<size_t>(r) - 1]) return;
        for (int v = std::max(1, last_value); v <= static_cast<int>(mu.size()); ++v) {
            if (placed[static_cast<size_t>(v) - 1] >= mu[static_cast<size_t>(v) - 1]) continue;
            // Column strictness against the cell above (skew cells only).
            if (r > 0 && c >= lambda[static_cast<size_t>(r) - 1]) {
                int above = row_values[static_cast<size_t>(r) - 1]
                                      [static_cast<size_t>(c - lambda[static_cast<size_t>(r) - 1])];
                if (above >= v) continue;
            }
            // Lattice word: after this row, #v <= #(v-1) counted through the previous row.
            if (v >= 2) {
                int prev = cum[static_cast<size_t>(r)][static_cast<size_t>(v) - 2];
                if (cum[static_cast<size_t>(r) + 1][static_cast<size_t>(v) - 1] + 1 > prev) continue;
            }
            placed[static_cast<size_t>(v) - 1] += 1;
            cum[static_cast<size_t>(r) + 1][static_cast<size_t>(v) - 1] += 1;
            row_values[static_cast<size_t>(r)].push_back(v);
            shape[static_cast<size_t>(r)] += 1;
            fill_cell(r, c + 1, v);
            shape[static_cast<size_t>(r)] -= 1;
            row_values[static_cast<size_t>(r)].pop_back();
            cum[static_cast<size_t>(r) + 1][static_cast<size_t>(v) - 1] -= 1;
            placed[static_cast<size_t>(v) - 1] -= 1;
        }
    }
};

} // namespace

WeightMultiset lr_tensor(const Weight& lambda, const Weight& mu) {
    if (lambda.size() != mu.size())
        throw Error("lr_tensor: rank mismatch");
    if (!is_nonincreasing(lambda) || !is_nonincreasing(mu))
        throw Error("lr_tensor: weights must be dominant");
    const int n = static_cast<int>(lambda.size());
    if (n == 0) return {{Weight{}, 1}};

    // Uniform determinant shifts making both factors partitions.
    const int sl = std::min(0, lambda.back());
    const int sm = std::min(0, mu.back());
    std::vector<int> lam(lambda.begin(), lambda.end());
    std::vector<int> m(mu.begin(), mu.end());
    for (auto& x : lam) x -= sl;
    for (auto& x : m) x -= sm;

    i64 wl = 0, wm = 0;
    for (int x : lam) wl += x;
    for (int x : m) wm += x;
    if (wl < wm) std::swap(lam, m); // skew content is the smaller factor

    std::vector<int> content;
    for (int x : m)
        if (x > 0) content.push_back(x);
    // rows of mu beyond its nonzero part contribute nothing
    if (!content.empty() && !std::is_sorted(content.begin(), content.end(), std::greater<int>()))
        throw Error("lr_tensor: internal content error");

    LrEnumerator e;
    e.n = n;
    e.lambda = lam;
    e.mu = content;
    e.run();

    WeightMultiset shifted;
    for (auto& [nu, c] : e.out) {
        Weight back = nu;
        for (auto& x : back) x += sl + sm;
        shifted[back] += c;
    }
    return shifted;
}

} // namespace fano
