/*
   Copyright 2026 The cuelab authors

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

#include "cuelab/limits.hpp"

#include <cstdlib>
#include <string>

namespace cuelab {

std::uint64_t max_enum() {
    static const std::uint64_t cap = [] {
        const char* env = std::getenv("CUE_LAB_MAX_ENUM");
        if (env == nullptr) return kDefaultMaxEnum;
        try {
            const unsigned long long v = std::stoull(env);
            return v > 0 ? static_cast<std::uint64_t>(v) : kDefaultMaxEnum;
        } catch (const std::exception&) {
            return kDefaultMaxEnum;
        }
    }();
    return cap;
}

}  // namespace cuelab
