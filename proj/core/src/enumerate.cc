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

#include "qduadic/enumerate.h"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>

#include "qduadic/number_theory.h"

namespace qduadic {

namespace {

__extension__ using uint128 = unsigned __int128;

}  // namespace

namespace {

// Row r scaled by x^b, followed by its tag image, for digit j = r * s + b.
std::vector<std::vector<Elem>> scaled_digit_vectors(const Matrix& g, const Matrix* tag) {
    const Field& f = *g.field();
    const unsigned s = f.m();
    std::vector<std::vector<Elem>> out;
    out.reserve(g.rows() * s);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        std::vector<Elem> row(g.row(r).begin(), g.row(r).end());
        if (tag != nullptr) {
            auto image = tag->apply(g.row(r));
            row.insert(row.end(), image.begin(), image.end());
        }
        Elem basis = 1;
        for (unsigned b = 0; b < s; ++b) {
            std::vector<Elem> scaled(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) {
                scaled[i] = f.mul(basis, row[i]);
            }
            out.push_back(std::move(scaled));
            basis *= f.p();
        }
    }
    return out;
}

// Gray digits of state i: g_j = d_j - d_{j+1} (mod p) on the base-p digits.
std::vector<std::uint32_t> gray_digits(std::uint64_t state, std::uint32_t p, std::size_t count) {
    std::vector<std::uint32_t> plain(count + 1, 0);
    for (std::size_t j = 0; j < count && state > 0; ++j) {
        plain[j] = static_cast<std::uint32_t>(state % p);
        state /= p;
    }
    std::vector<std::uint32_t> out(count);
    for (std::size_t j = 0; j < count; ++j) {
        out[j] = (plain[j] + p - plain[j + 1]) % p;
    }
    return out;
}

std::vector<Elem> state_vector(const Field& f, const std::vector<std::vector<Elem>>& digits, std::size_t width,
                               std::uint64_t state) {
    std::vector<Elem> acc(width, 0);
    auto g = gray_digits(state, f.p(), digits.size());
    for (std::size_t j = 0; j < digits.size(); ++j) {
        for (std::uint32_t rep = 0; rep < g[j]; ++rep) {
            for (std::size_t i = 0; i < width; ++i) {
                acc[i] = f.add(acc[i], digits[j][i]);
            }
        }
    }
    return acc;
}

struct Partial {
    std::uint64_t visited = 0;
    std::uint32_t best = UINT32_MAX;
    std::uint64_t best_step = 0;
    std::vector<std::uint64_t> histogram;
};

struct Job {
    const Field* field;
    std::size_t n;
    std::size_t t;
    bool histogram;
    const std::vector<std::vector<Elem>>* digits;
};

// Symbols of s bits packed 64 / s to a word; code symbols first, tag symbols after.
struct PackedLayout {
    unsigned s;
    std::size_t per_word;
    std::size_t words;
    std::vector<std::uint64_t> code_low;
    std::vector<std::uint64_t> tag_bits;

    PackedLayout(unsigned s_bits, std::size_t n, std::size_t t) : s(s_bits), per_word(64 / s_bits) {
        words = (n + t + per_word - 1) / per_word;
        if (words == 0) {
            words = 1;
        }
        code_low.assign(words, 0);
        tag_bits.assign(words, 0);
        const std::uint64_t symbol_mask = (s == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1);
        for (std::size_t i = 0; i < n + t; ++i) {
            const std::size_t w = i / per_word;
            const unsigned shift = static_cast<unsigned>((i % per_word) * s);
            if (i < n) {
                code_low[w] |= std::uint64_t{1} << shift;
            } else {
                tag_bits[w] |= symbol_mask << shift;
            }
        }
    }

    template <std::size_t W>
    std::array<std::uint64_t, W> pack(const std::vector<Elem>& v) const {
        std::array<std::uint64_t, W> out{};
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i / per_word] |= static_cast<std::uint64_t>(v[i]) << ((i % per_word) * s);
        }
        return out;
    }
};

template <std::size_t W>
Partial run_packed(const Job& job, const PackedLayout& layout, std::uint64_t lo, std::uint64_t hi) {
    using Vec = std::array<std::uint64_t, W>;
    std::vector<Vec> digits;
    digits.reserve(job.digits->size());
    for (const auto& d : *job.digits) {
        digits.push_back(layout.template pack<W>(d));
    }
    Vec code_low{}, tag_bits{};
    for (std::size_t w = 0; w < W; ++w) {
        code_low[w] = w < layout.words ? layout.code_low[w] : 0;
        tag_bits[w] = w < layout.words ? layout.tag_bits[w] : 0;
    }
    const bool tagged = job.t > 0;
    const unsigned s = layout.s;

    Partial out;
    if (job.histogram) {
        out.histogram.assign(job.n + 1, 0);
    }
    Vec cur = layout.template pack<W>(state_vector(*job.field, *job.digits, job.n + job.t, lo));
    for (std::uint64_t step = lo + 1; step <= hi; ++step) {
        const Vec& add = digits[static_cast<std::size_t>(std::countr_zero(step))];
        for (std::size_t w = 0; w < W; ++w) {
            cur[w] ^= add[w];
        }
        std::uint32_t weight = 0;
        if (s == 1) {
            for (std::size_t w = 0; w < W; ++w) {
                weight += static_cast<std::uint32_t>(std::popcount(cur[w] & code_low[w]));
            }
        } else {
            for (std::size_t w = 0; w < W; ++w) {
                std::uint64_t folded = cur[w];
                for (unsigned b = 1; b < s; ++b) {
                    folded |= cur[w] >> b;
                }
                weight += static_cast<std::uint32_t>(std::popcount(folded & code_low[w]));
            }
        }
        if (job.histogram) {
            ++out.histogram[weight];
        }
        if (weight < out.best) {
            bool accepted = true;
            if (tagged) {
                std::uint64_t any = 0;
                for (std::size_t w = 0; w < W; ++w) {
                    any |= cur[w] & tag_bits[w];
                }
                accepted = any != 0;
            }
            if (accepted) {
                out.best = weight;
                out.best_step = step;
            }
        }
    }
    out.visited = hi - lo;
    return out;
}

Partial run_bytes(const Job& job, std::uint64_t lo, std::uint64_t hi) {
    const Field& f = *job.field;
    const std::uint64_t q = f.order();
    const std::uint32_t p = f.p();
    std::vector<std::uint8_t> add_table(q * q);
    for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
            add_table[a * q + b] = static_cast<std::uint8_t>(f.add(a, b));
        }
    }
    const std::size_t width = job.n + job.t;
    std::vector<std::vector<std::uint8_t>> digits;
    for (const auto& d : *job.digits) {
        digits.emplace_back(d.begin(), d.end());
    }
    auto start = state_vector(f, *job.digits, width, lo);
    std::vector<std::uint8_t> cur(start.begin(), start.end());

    Partial out;
    if (job.histogram) {
        out.histogram.assign(job.n + 1, 0);
    }
    for (std::uint64_t step = lo + 1; step <= hi; ++step) {
        std::size_t j = 0;
        for (std::uint64_t rest = step; rest % p == 0; rest /= p) {
            ++j;
        }
        const auto& add = digits[j];
        std::uint32_t weight = 0;
        for (std::size_t i = 0; i < job.n; ++i) {
            cur[i] = add_table[cur[i] * q + add[i]];
            weight += cur[i] != 0;
        }
        bool tag_nonzero = false;
        for (std::size_t i = job.n; i < width; ++i) {
            cur[i] = add_table[cur[i] * q + add[i]];
            tag_nonzero |= cur[i] != 0;
        }
        if (job.histogram) {
            ++out.histogram[weight];
        }
        if (weight < out.best && (job.t == 0 || tag_nonzero)) {
            out.best = weight;
            out.best_step = step;
        }
    }
    out.visited = hi - lo;
    return out;
}

Partial run_range(const Job& job, std::uint64_t lo, std::uint64_t hi) {
    const Field& f = *job.field;
    if (f.p() == 2 && f.m() <= 8) {
        PackedLayout layout(f.m(), job.n, job.t);
        switch (layout.words) {
            case 1: return run_packed<1>(job, layout, lo, hi);
            case 2: return run_packed<2>(job, layout, lo, hi);
            case 3: return run_packed<3>(job, layout, lo, hi);
            case 4: return run_packed<4>(job, layout, lo, hi);
            case 5:
            case 6: return run_packed<6>(job, layout, lo, hi);
            case 7:
            case 8: return run_packed<8>(job, layout, lo, hi);
            default:
                if (layout.words <= 16) {
                    return run_packed<16>(job, layout, lo, hi);
                }
                break;
        }
    }
    return run_bytes(job, lo, hi);
}

}  // namespace

std::optional<std::uint64_t> message_space_size(const Field& field, std::size_t k) {
    try {
        return checked_pow(field.order(), static_cast<unsigned>(k));
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

std::vector<Elem> codeword_at_step(const Matrix& generator, std::uint64_t step) {
    auto digits = scaled_digit_vectors(generator, nullptr);
    return state_vector(*generator.field(), digits, generator.cols(), step);
}

EnumerateOutcome enumerate_codewords(const Matrix& generator, const Matrix* tag, const EnumerateOptions& options) {
    const Field& f = *generator.field();
    const std::size_t n = generator.cols();
    const std::size_t t = tag != nullptr ? tag->rows() : 0;
    if (tag != nullptr && tag->cols() != n) {
        throw std::invalid_argument("enumerate_codewords: tag matrix width must equal code length");
    }
    if (f.order() > 256) {
        throw std::invalid_argument("enumerate_codewords: field " + f.name() + " is too large for enumeration");
    }
    auto total = message_space_size(f, generator.rows());
    if (!total) {
        throw std::invalid_argument("enumerate_codewords: message space exceeds 64 bits");
    }
    const std::uint64_t last = options.last_step == 0 ? *total : std::min(options.last_step, *total);
    const std::uint64_t first = std::max<std::uint64_t>(options.first_step, 1);

    EnumerateOutcome outcome;
    if (options.histogram) {
        outcome.histogram.assign(n + 1, 0);
    }
    if (first >= last) {
        return outcome;
    }

    auto digits = scaled_digit_vectors(generator, tag);
    Job job{&f, n, t, options.histogram, &digits};

    // States (lo, hi] are visited; the walk covers states first .. last - 1.
    const std::uint64_t lo = first - 1;
    const std::uint64_t hi = last - 1;
    const std::uint64_t span = hi - lo;
    const unsigned workers = static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, span));
    std::vector<Partial> partials(workers);
    auto bound = [&](unsigned w) {
        return lo + static_cast<std::uint64_t>(static_cast<uint128>(span) * w / workers);
    };
    if (workers == 1) {
        partials[0] = run_range(job, lo, hi);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { partials[w] = run_range(job, bound(w), bound(w + 1)); });
        }
        for (auto& th : threads) {
            th.join();
        }
    }

    std::uint32_t best = UINT32_MAX;
    std::uint64_t best_step = 0;
    for (const auto& part : partials) {
        outcome.visited += part.visited;
        if (part.best < best || (part.best == best && part.best_step < best_step)) {
            best = part.best;
            best_step = part.best_step;
        }
        for (std::size_t i = 0; i < part.histogram.size(); ++i) {
            outcome.histogram[i] += part.histogram[i];
        }
    }
    if (best != UINT32_MAX) {
        outcome.best_weight = best;
        outcome.best_step = best_step;
        outcome.witness = state_vector(f, digits, n + t, best_step);
        outcome.witness.resize(n);
    }
    return outcome;
}

}  // namespace qduadic
