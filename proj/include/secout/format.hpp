// SPDX-License-Identifier: Apache-2.0
//
// secout - outage and secrecy outage analysis for fading wireless channels
// Copyright (C) 2026 the secout authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SECOUT_FORMAT_HPP
#define SECOUT_FORMAT_HPP

#include <string>

namespace secout {

/// Decimal text for a double, capped at 12 significant digits with
/// trailing zeros removed; "nan" for quiet NaN. The same value always
/// produces the same bytes, which keeps emitted CSV diff-stable.
std::string format_number(double value);

} // namespace secout

#endif // SECOUT_FORMAT_HPP
