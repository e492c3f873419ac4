#include "mahonia/qseries.hpp"

#include <algorithm>

#include "mahonia/errors.hpp"

namespace mahonia {

QPoly q_integer(int n) {
    if (n < 0) throw precondition_error("q_integer: n must be >= 0");
    QPoly p;
    for (int e = 0; e < n; ++e) p.add_term(e, 1);
    return p;
}

QPoly q_factorial(int n) {
    if (n < 0) throw precondition_error("q_factorial: n must be >= 0");
    QPoly p = QPoly::one();
    for (int i = 2; i <= n; ++i) p = p * q_integer(i);
    return p;
}

QPoly gauss_binomial(int s, int t) {
    if (s < 0 || t < 0) throw precondition_error("gauss_binomial: arguments must be >= 0");
    // Pascal recurrence [i choose j] = [i-1 choose j] + q^{i-j} [i-1 choose j-1],
    // one row at a time.
    const int n = s + t;
    const int k = std::min(s, t);
    std::vector<QPoly> row(static_cast<size_t>(k) + 1);
    row[0] = QPoly::one();
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            if (j == i) {
                row[static_cast<size_t>(j)] = QPoly::one();
                continue;
            }
            QPoly shifted;
            for (const auto& [exp, c] : row[static_cast<size_t>(j - 1)].terms())
                shifted.add_term(exp + (i - j), c);
            row[static_cast<size_t>(j)] += shifted;
        }
    }
    return row[static_cast<size_t>(k)];
}

QPoly q_multinomial(const std::vector<int>& ks) {
    QPoly result = QPoly::one();
    int prefix = 0;
    for (int k : ks) {
        if (k < 0) throw precondition_error("q_multinomial: block sizes must be >= 0");
        result = result * gauss_binomial(prefix, k);
        prefix += k;
    }
    return result;
}

QPoly q_multinomial_by_division(const std::vector<int>& ks) {
    int s = 0;
    for (int k : ks) {
        if (k < 0) throw precondition_error("q_multinomial: block sizes must be >= 0");
        s += k;
    }
    QPoly denom = QPoly::one();
    for (int k : ks) denom = denom * q_factorial(k);
    return QPoly::divide_exact(q_factorial(s), denom);
}

std::vector<Partition> partitions_in_box(int s, int t) {
    if (s < 0 || t < 0) throw precondition_error("partitions_in_box: arguments must be >= 0");
    std::vector<Partition> out;
    for_each_partition_in_box(s, t, [&](const std::vector<int>& parts) {
        out.emplace_back(parts, s, t);
    });
    return out;
}

} // namespace mahonia
