// Copyright 2023 The Authors.
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

#include "mtk/core.hpp"
#include "mtk/random.hpp"
#include "mtk/hypergraph.hpp"
#include "mtk/complex.hpp"
#include "mtk/matroid.hpp"
#include "mtk/intersection.hpp"
#include "mtk/homology.hpp"
#include "mtk/record.hpp"
#include "mtk/topology.hpp"
#include "mtk/meshulam.hpp"
#include "mtk/lp.hpp"
#include "mtk/coloring.hpp"
#include "mtk/polytopes.hpp"
#include "mtk/matdim.hpp"
#include "mtk/instance.hpp"
#include "mtk/constructions.hpp"
#include "mtk/verify.hpp"
