/*
   Copyright 2026 The cuelab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cuelab/contingency.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cuelab/charmap.hpp"
#include "cuelab/symfunc.hpp"

namespace cuelab {

std::vector<int> MarginMatrix::row_sums() const {
    std::vector<int> s(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(i)] += at(i, j);
    return s;
}

std::vector<int> MarginMatrix::col_sums() const {
    std::vector<int> s(static_cast<std::size_t>(cols), 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(j)] += at(i, j);
    return s;
}

MarginMatrix MarginMatrix::transposed() const {
    MarginMatrix t{cols, rows, std::vector<int>(entries.size(), 0)};
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// Shared backtracking core. Fills row-major; the last column of each row is
// forced by the row remainder, the last row is forced by column remainders.
class MatrixSearch {
public:
    MatrixSearch(const Partition& mu, const Partition& nu, std::uint64_t node_limit,
                 std::uint64_t max_matrices, std::vector<MarginMatrix>* collect)
        : rows_(mu.length()),
          cols_(nu.length()),
          row_sums_(mu.parts()),
          col_rem_(nu.parts()),
          node_limit_(node_limit),
          max_matrices_(max_matrices),
          collect_(collect) {
        work_.rows = rows_;
        work_.cols = cols_;
        work_.entries.assign(static_cast<std::size_t>(rows_ * cols_), 0);
    }

    Int run() {
        if (row_total() != col_total()) return 0;
        if (rows_ == 0 || cols_ == 0) {
            // Both margins empty (total 0): the unique empty matrix.
            if (collect_ != nullptr) collect_->push_back(work_);
            return 1;
        }
        fill_cell(0, 0, row_sums_[0]);
        return count_;
    }

private:
    long row_total() const { return std::accumulate(row_sums_.begin(), row_sums_.end(), 0L); }
    long col_total() const { return std::accumulate(col_rem_.begin(), col_rem_.end(), 0L); }

    void tick() {
        if (++nodes_ > node_limit_)
            throw bound_error("count_matrices: node limit " + std::to_string(node_limit_) +
                              " exceeded");
    }

    void fill_cell(int i, int j, int row_rem) {
        tick();
        if (i == rows_ - 1) {
            // Final row forced by the column remainders.
            for (int jj = 0; jj < cols_; ++jj) work_.at(i, jj) = col_rem_[static_cast<std::size_t>(jj)];
            emit();
            return;
        }
        if (j == cols_ - 1) {
            if (row_rem > col_rem_[static_cast<std::size_t>(j)]) return;
            work_.at(i, j) = row_rem;
            col_rem_[static_cast<std::size_t>(j)] -= row_rem;
            fill_cell(i + 1, 0, row_sums_[static_cast<std::size_t>(i + 1)]);
            col_rem_[static_cast<std::size_t>(j)] += row_rem;
            work_.at(i, j) = 0;
            return;
        }
        int tail = 0;  // column capacity to the right of j
        for (int jj = j + 1; jj < cols_; ++jj) tail += col_rem_[static_cast<std::size_t>(jj)];
        const int lo = std::max(0, row_rem - tail);
        const int hi = std::min(row_rem, col_rem_[static_cast<std::size_t>(j)]);
        for (int v = lo; v <= hi; ++v) {
            work_.at(i, j) = v;
            col_rem_[static_cast<std::size_t>(j)] -= v;
            fill_cell(i, j + 1, row_rem - v);
            col_rem_[static_cast<std::size_t>(j)] += v;
        }
        work_.at(i, j) = 0;
    }

    void emit() {
        ++count_;
        if (collect_ != nullptr) {
            if (static_cast<std::uint64_t>(collect_->size()) >= max_matrices_)
                throw bound_error("enumerate_matrices: more than " + std::to_string(max_matrices_) +
                                  " matrices");
            collect_->push_back(work_);
        }
    }

    int rows_;
    int cols_;
    std::vector<int> row_sums_;
    std::vector<int> col_rem_;
    std::uint64_t node_limit_;
    std::uint64_t max_matrices_ = 0;
    std::vector<MarginMatrix>* collect_;
    MarginMatrix work_;
    std::uint64_t nodes_ = 0;
    Int count_ = 0;
};

}  // namespace

Int count_matrices(const Partition& mu, const Partition& nu, std::uint64_t node_limit) {
    MatrixSearch search(mu, nu, node_limit, 0, nullptr);
    return search.run();
}

std::vector<MarginMatrix> enumerate_matrices(const Partition& mu, const Partition& nu,
                                             std::uint64_t max_matrices) {
    std::vector<MarginMatrix> out;
    MatrixSearch search(mu, nu, kDefaultNodeLimit, max_matrices, &out);
    search.run();
    return out;
}

Int count_via_kostka(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("count_via_kostka: margin totals differ");
    Int total = 0;
    for (const Partition& la : enumerate_partitions(mu.size(), kDegreeBound))
        total += kostka(la, mu) * kostka(la, nu);
    return total;
}

Int count_via_sn_average(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("count_via_sn_average: margin totals differ");
    return to_int(sn_inner_product(d_lambda_class_function(mu), d_lambda_class_function(nu)));
}

bool multinomial_identity_check(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size()) return count_matrices(mu, nu) == 0;
    const int n = mu.size();
    if (n > 8) throw bound_error("multinomial_identity_check: n > 8");

    // Left side: n! <d_mu, d_nu>, the average over S_n of d_mu d_nu.
    const Rat lhs =
        Rat(factorial(n)) * sn_inner_product(d_lambda_class_function(mu), d_lambda_class_function(nu));

    // Right side: ordered set-partition pairs grouped by intersection matrix;
    // multinomial(n; c_ij) pairs share a matrix, each weighted prod c_ij!.
    Int rhs = 0;
    for (const MarginMatrix& m : enumerate_matrices(mu, nu)) {
        Int pairs = factorial(n);
        Int weight = 1;
        for (int c : m.entries) {
            pairs /= factorial(c);
            weight *= factorial(c);
        }
        rhs += pairs * weight;
    }
    return lhs == Rat(rhs);
}

}  // namespace cuelab
