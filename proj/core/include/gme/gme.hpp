// Copyright 2026 The tripartite-gme Authors
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

#ifndef GME_GME_HPP
#define GME_GME_HPP

#include "gme/audit.hpp"
#include "gme/bipartition.hpp"
#include "gme/bloch.hpp"
#include "gme/criteria.hpp"
#include "gme/errors.hpp"
#include "gme/linalg.hpp"
#include "gme/matrix.hpp"
#include "gme/state.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"

#endif  // GME_GME_HPP
