#pragma once

#include "cutcover/rational.hpp"

#include <mutex>
#include <vector>

namespace cutcover {

// Big-integer binomial coefficients via cached Pascal rows.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    static std::vector<std::vector<BigInt>> rows{{1}};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (int(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1, 1);
        for (size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

} // namespace cutcover
