// SPDX-License-Identifier: Apache-2.0
//
// fdaris - range-angle secrecy toolkit for RIS-assisted FDA links
// Copyright (C) 2026 The fdaris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef FDARIS_HPP
#define FDARIS_HPP

#include "fdaris/units.hpp"
#include "fdaris/geometry.hpp"
#include "fdaris/channel.hpp"
#include "fdaris/beamforming.hpp"
#include "fdaris/stats.hpp"
#include "fdaris/secrecy.hpp"
#include "fdaris/optimize.hpp"
#include "fdaris/techniques.hpp"
#include "fdaris/oracle.hpp"
#include "fdaris/parallel.hpp"
#include "fdaris/csv.hpp"
#include "fdaris/config.hpp"
#include "fdaris/sweeps.hpp"
#include "fdaris/verify.hpp"

#endif
