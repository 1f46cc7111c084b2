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
#ifndef QDUADIC_ENUMERATE_H
#define QDUADIC_ENUMERATE_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qduadic/galois.h"
#include "qduadic/linalg.h"

namespace qduadic {

/// Exhaustive walk over the message space of a linear code.
///
/// Messages are visited in the reflected p-ary Gray order over the k*s digits
/// of GF(p^s)^k: step i adds the scaled generator row indexed by the p-adic
/// valuation of i. Each step therefore costs one vector addition, and the
/// codeword at any step can be computed directly, which is what lets workers
/// start in the middle of the sequence.
struct EnumerateOptions {
    /// Record the weight histogram of the visited codewords.
    bool histogram = false;
    /// Worker threads; results do not depend on this.
    unsigned workers = 1;
    /// Restrict the walk to steps in [first_step, last_step). Zero last_step
    /// means the whole space.
    std::uint64_t first_step = 1;
    std::uint64_t last_step = 0;
};

struct EnumerateOutcome {
    std::uint64_t visited = 0;  // nonzero codewords examined
    /// Minimum weight among accepted codewords; accepted means tag * c != 0
    /// when a tag matrix is given, and any nonzero codeword otherwise.
    std::optional<std::uint32_t> best_weight;
    std::uint64_t best_step = 0;
    std::vector<Elem> witness;
    std::vector<std::uint64_t> histogram;  // indexed by weight, size n + 1
};

/// q^k, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> message_space_size(const Field& field, std::size_t k);

/// Walks every nonzero codeword spanned by the rows of generator (assumed to
/// be linearly independent). tag may be null.
EnumerateOutcome enumerate_codewords(const Matrix& generator, const Matrix* tag, const EnumerateOptions& options);

/// The codeword reached after step Gray steps.
std::vector<Elem> codeword_at_step(const Matrix& generator, std::uint64_t step);

}  // namespace qduadic

#endif  // QDUADIC_ENUMERATE_H
