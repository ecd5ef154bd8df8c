// Copyright 2026 The KPE Authors.
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

#ifndef KPE_IO_HPP_
#define KPE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace kpe {

// Whole-file read; throws Error(kIo).
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partially written file. Throws Error(kIo).
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

}  // namespace kpe

#endif  // KPE_IO_HPP_
