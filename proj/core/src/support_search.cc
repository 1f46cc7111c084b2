// Copyright 2026 The qduadic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduadic/support_search.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qduadic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) {
        return kSaturated;
    }
    return a * b;
}

// Column i of [check; tag], one symbol per row.
std::vector<std::vector<Elem>> stacked_columns(const Matrix& check, const Matrix* tag) {
    const std::size_t n = check.cols();
    std::vector<std::vector<Elem>> cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < check.rows(); ++r) {
            cols[i].push_back(check.at(r, i));
        }
        if (tag != nullptr) {
            for (std::size_t r = 0; r < tag->rows(); ++r) {
                cols[i].push_back(tag->at(r, i));
            }
        }
    }
    return cols;
}

class BinarySearcher {
   public:
    BinarySearcher(const std::vector<std::vector<Elem>>& cols, std::size_t check_rows, std::size_t height)
        : words_((height + 63) / 64 == 0 ? 1 : (height + 63) / 64),
          check_mask_(words_, 0),
          tag_mask_(words_, 0),
          tagged_(height > check_rows) {
        for (std::size_t b = 0; b < height; ++b) {
            auto& mask = b < check_rows ? check_mask_ : tag_mask_;
            mask[b / 64] |= std::uint64_t{1} << (b % 64);
        }
        for (const auto& col : cols) {
            std::vector<std::uint64_t> packed(words_, 0);
            for (std::size_t b = 0; b < col.size(); ++b) {
                if (col[b] != 0) {
                    packed[b / 64] |= std::uint64_t{1} << (b % 64);
                }
            }
            columns_.push_back(std::move(packed));
        }
    }

    bool search(std::uint32_t w, std::vector<std::size_t>& positions, std::uint64_t& candidates) {
        stack_.assign((w + 1) * words_, 0);
        positions.assign(w, 0);
        return descend(0, 0, w, positions, candidates);
    }

   private:
    bool descend(std::uint32_t depth, std::size_t start, std::uint32_t w, std::vector<std::size_t>& positions,
                 std::uint64_t& candidates) {
        const std::size_t n = columns_.size();
        const std::uint64_t* syn = &stack_[depth * words_];
        if (depth == w) {
            ++candidates;
            std::uint64_t check_bits = 0;
            std::uint64_t tag_bits = 0;
            for (std::size_t i = 0; i < words_; ++i) {
                check_bits |= syn[i] & check_mask_[i];
                tag_bits |= syn[i] & tag_mask_[i];
            }
            return check_bits == 0 && (!tagged_ || tag_bits != 0);
        }
        std::uint64_t* next = &stack_[(depth + 1) * words_];
        for (std::size_t pos = start; pos + (w - depth) <= n; ++pos) {
            const auto& col = columns_[pos];
            for (std::size_t i = 0; i < words_; ++i) {
                next[i] = syn[i] ^ col[i];
            }
            positions[depth] = pos;
            if (descend(depth + 1, pos + 1, w, positions, candidates)) {
                return true;
            }
        }
        return false;
    }

    std::size_t words_;
    std::vector<std::uint64_t> check_mask_;
    std::vector<std::uint64_t> tag_mask_;
    bool tagged_;
    std::vector<std::vector<std::uint64_t>> columns_;
    std::vector<std::uint64_t> stack_;
};

class GeneralSearcher {
   public:
    GeneralSearcher(const Field& field, const std::vector<std::vector<Elem>>& cols, std::size_t check_rows,
                    std::size_t height)
        : field_(field), check_rows_(check_rows), height_(height), tagged_(height > check_rows) {
        const std::uint64_t q = field.order();
        scaled_.resize(q);
        for (Elem lambda = 1; lambda < q; ++lambda) {
            for (const auto& col : cols) {
                std::vector<Elem> v(height);
                for (std::size_t b = 0; b < height; ++b) {
                    v[b] = field.mul(lambda, col[b]);
                }
                scaled_[lambda].push_back(std::move(v));
            }
        }
    }

    bool search(std::uint32_t w, std::vector<std::size_t>& positions, std::vector<Elem>& scalars,
                std::uint64_t& candidates) {
        stack_.assign((w + 1) * height_, 0);
        positions.assign(w, 0);
        scalars.assign(w, 0);
        return descend(0, 0, w, positions, scalars, candidates);
    }

   private:
    bool descend(std::uint32_t depth, std::size_t start, std::uint32_t w, std::vector<std::size_t>& positions,
                 std::vector<Elem>& scalars, std::uint64_t& candidates) {
        const std::size_t n = scaled_[1].size();
        const Elem* syn = &stack_[depth * height_];
        if (depth == w) {
            ++candidates;
            bool check_zero = true;
            bool tag_nonzero = false;
            for (std::size_t b = 0; b < height_; ++b) {
                if (b < check_rows_) {
                    check_zero &= syn[b] == 0;
                } else {
                    tag_nonzero |= syn[b] != 0;
                }
            }
            return check_zero && (!tagged_ || tag_nonzero);
        }
        Elem* next = &stack_[(depth + 1) * height_];
        const Elem last_scalar = depth == 0 ? 1 : field_.order() - 1;
        for (std::size_t pos = start; pos + (w - depth) <= n; ++pos) {
            for (Elem lambda = 1; lambda <= last_scalar; ++lambda) {
                const auto& col = scaled_[lambda][pos];
                for (std::size_t b = 0; b < height_; ++b) {
                    next[b] = field_.add(syn[b], col[b]);
                }
                positions[depth] = pos;
                scalars[depth] = lambda;
                if (descend(depth + 1, pos + 1, w, positions, scalars, candidates)) {
                    return true;
                }
            }
        }
        return false;
    }

    const Field& field_;
    std::size_t check_rows_;
    std::size_t height_;
    bool tagged_;
    std::vector<std::vector<std::vector<Elem>>> scaled_;
    std::vector<Elem> stack_;
};

}  // namespace

std::uint64_t support_candidates(std::uint32_t n, std::uint64_t q, std::uint32_t w) {
    if (w == 0 || w > n) {
        return 0;
    }
    // C(n, w) built incrementally; each partial product is itself a binomial.
    std::uint64_t binom = 1;
    for (std::uint32_t i = 1; i <= w; ++i) {
        const std::uint64_t num = n - w + i;
        if (binom > kSaturated / num) {
            return kSaturated;
        }
        binom = binom * num / i;
    }
    std::uint64_t total = binom;
    for (std::uint32_t i = 1; i < w; ++i) {
        total = saturating_mul(total, q - 1);
    }
    return total;
}

SupportSearchOutcome support_search(const Matrix& check, const Matrix* tag, std::uint64_t budget,
                                    std::uint32_t max_weight) {
    const Field& f = *check.field();
    const auto n = static_cast<std::uint32_t>(check.cols());
    if (tag != nullptr && tag->cols() != n) {
        throw std::invalid_argument("support_search: tag matrix width must equal code length");
    }
    const std::size_t check_rows = check.rows();
    const std::size_t height = check_rows + (tag != nullptr ? tag->rows() : 0);
    auto cols = stacked_columns(check, tag);

    SupportSearchOutcome out;
    std::vector<std::size_t> positions;
    std::vector<Elem> scalars;
    const bool binary = f.order() == 2;
    std::optional<BinarySearcher> binary_searcher;
    std::optional<GeneralSearcher> general_searcher;
    if (binary) {
        binary_searcher.emplace(cols, check_rows, height);
    } else {
        general_searcher.emplace(f, cols, check_rows, height);
    }

    for (std::uint32_t w = 1; w <= std::min(max_weight, n); ++w) {
        const std::uint64_t cost = support_candidates(n, f.order(), w);
        if (cost > budget - out.candidates) {
            out.budget_exhausted = true;
            break;
        }
        bool hit = false;
        if (binary) {
            hit = binary_searcher->search(w, positions, out.candidates);
            scalars.assign(w, 1);
        } else {
            hit = general_searcher->search(w, positions, scalars, out.candidates);
        }
        if (hit) {
            out.hit_weight = w;
            out.witness.assign(n, 0);
            for (std::uint32_t i = 0; i < w; ++i) {
                out.witness[positions[i]] = scalars[i];
            }
            break;
        }
        out.exhausted_through = w;
    }
    return out;
}

}  // namespace qduadic
