/*
   Copyright 2026 The hyrec Authors

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

#ifndef HYREC_HYREC_HPP
#define HYREC_HYREC_HPP

#include "hyrec/error.hpp"
#include "hyrec/ff/ext_field.hpp"
#include "hyrec/ff/prime_field.hpp"
#include "hyrec/jacobian/jacobian.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/poly/integer_polynomial.hpp"
#include "hyrec/poly/polynomial.hpp"
#include "hyrec/primes.hpp"
#include "hyrec/random.hpp"
#include "hyrec/reciprocity/reciprocity.hpp"
#include "hyrec/torsion/binary_matrix.hpp"
#include "hyrec/torsion/blowup.hpp"
#include "hyrec/torsion/two_torsion.hpp"

#endif  // HYREC_HYREC_HPP
