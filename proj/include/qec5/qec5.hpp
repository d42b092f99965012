// Copyright 2026 The qec5 Authors
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

#include "qec5/channels.hpp"
#include "qec5/code5.hpp"
#include "qec5/experiment.hpp"
#include "qec5/io.hpp"
#include "qec5/linalg.hpp"
#include "qec5/pauli.hpp"
#include "qec5/presets.hpp"
#include "qec5/structured.hpp"
#include "qec5/validation.hpp"
#include "qec5/version.hpp"
