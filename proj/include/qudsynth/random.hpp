// Copyright 2026 The qudsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <random>

#include "qudsynth/linalg.hpp"

namespace qudsynth {

using Rng = std::mt19937_64;

/// Entries with independent standard complex Gaussian components.
Matrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fixing).
Matrix random_unitary(std::size_t n, Rng& rng);

/// rows x cols matrix with orthonormal columns.
Matrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Normalized state with Gaussian amplitudes.
StateVector random_state(std::size_t dim, Rng& rng);

/// G G^dag / Tr(G G^dag).
Matrix random_density_matrix(std::size_t dim, Rng& rng);

Matrix random_hermitian(std::size_t n, Rng& rng);

/// Uniform on the unit circle.
cplx random_phase(Rng& rng);

}  // namespace qudsynth
