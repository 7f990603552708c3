/*
 * builtin_map.hpp
 *
 * Copyright (C) 2026 the OpportuNet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#ifndef OPPORTUNET_BUILTIN_MAP_HPP
#define OPPORTUNET_BUILTIN_MAP_HPP

namespace opportunet {

/// The default riverside-town map compiled into the library (used when
/// map.file is empty).  Generated at build time from data/river_town.map.
const char* builtin_map_text();

}  // namespace opportunet

#endif  // OPPORTUNET_BUILTIN_MAP_HPP
