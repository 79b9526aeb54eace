// Copyright 2026 The qcat authors
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

#include "qcat/acceptance.hpp"
#include "qcat/canonical.hpp"
#include "qcat/catalysis.hpp"
#include "qcat/expm.hpp"
#include "qcat/hamsim.hpp"
#include "qcat/io.hpp"
#include "qcat/monotone.hpp"
#include "qcat/pauli.hpp"
#include "qcat/random.hpp"
#include "qcat/state.hpp"
#include "qcat/types.hpp"
#include "qcat/unitary.hpp"
