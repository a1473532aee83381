// Copyright 2026 The TreeNoise Authors
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

#ifndef TREENOISE_TREENOISE_H_
#define TREENOISE_TREENOISE_H_

#include "treenoise/config.h"
#include "treenoise/dataset.h"
#include "treenoise/error.h"
#include "treenoise/eval.h"
#include "treenoise/paths.h"
#include "treenoise/perturb.h"
#include "treenoise/rng.h"
#include "treenoise/tree.h"

#endif  // TREENOISE_TREENOISE_H_
