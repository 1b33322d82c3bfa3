// Copyright 2026 The bglemma Authors.
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

#include <cstdlib>

#include "bglemma/ingest.h"

#ifndef BGLEMMA_BUILTIN_DEFAULT
#define BGLEMMA_BUILTIN_DEFAULT "builtin.bglx"
#endif

namespace bglemma {

std::filesystem::path builtin_dictionary_path() {
  if (const char* env = std::getenv("BGLEMMA_BUILTIN_DICT");
      env != nullptr && *env != '\0') {
    return env;
  }
  return BGLEMMA_BUILTIN_DEFAULT;
}

Dictionary load_builtin() { return load_builtin(builtin_dictionary_path()); }

Dictionary load_builtin(const std::filesystem::path& asset) {
  return load_dictionary(asset);
}

}  // namespace bglemma
