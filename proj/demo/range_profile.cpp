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

// Eve SNR along Bob's bearing for each technique, printed as a small table.

#include <cstdio>

#include "fdaris.hpp"

int main()
{
    using namespace fdaris;
    Scenario sc = Scenario::paper_baseline();
    sc.combine = CombineRule::Union;
    const PolarLocation bob = sc.bob();
    std::printf("Bob at %.2f m, %.4f rad\n", bob.range_m, bob.aoa_rad);
    std::printf("%8s %12s %12s %12s %10s\n", "range_m", "conv_dB", "fda_dB", "ribes_dB", "wiretap");
    for (double r : linspace(10.0, 190.0, 19))
    {
        const PolarLocation eve{r, bob.aoa_rad};
        const SecrecyReport c = evaluate(sc, eve, Technique::Conventional);
        const SecrecyReport f = evaluate(sc, eve, Technique::Fda);
        const SecrecyReport x = evaluate(sc, eve, Technique::FdaRibes);
        std::printf("%8.1f %12.2f %12.2f %12.2f %10s\n", r, linear_to_db(c.gamma_eve), linear_to_db(f.gamma_eve), linear_to_db(x.gamma_eve),
                    x.in_wiretap ? "yes" : "no");
    }
}
