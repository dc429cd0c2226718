// Copyright 2026 The p1dom Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef P1DOM_P1DOM_HPP
#define P1DOM_P1DOM_HPP

#include "p1dom/cohomology.hpp"
#include "p1dom/complex.hpp"
#include "p1dom/domination.hpp"
#include "p1dom/errors.hpp"
#include "p1dom/extension.hpp"
#include "p1dom/io.hpp"
#include "p1dom/laurent.hpp"
#include "p1dom/linalg.hpp"
#include "p1dom/matrix.hpp"
#include "p1dom/novikov.hpp"
#include "p1dom/random.hpp"
#include "p1dom/scalar.hpp"
#include "p1dom/series.hpp"
#include "p1dom/sheaf.hpp"
#include "p1dom/smith.hpp"

#endif  // P1DOM_P1DOM_HPP
