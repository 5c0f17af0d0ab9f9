// SPDX-License-Identifier: Apache-2.0
//
// uavris: RIS-assisted 3D connectivity simulator for UAV links
// Copyright (C) 2026 The uavris authors
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

#ifndef UAVRIS_ERRORS_HPP
#define UAVRIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uavris
{
    // Argument outside the documented domain of an operation
    class InvalidParameter : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // Two nodes share a position, so no direction can be derived
    class DegenerateGeometry : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    inline void require(bool condition, const std::string &message)
    {
        if (!condition)
            throw InvalidParameter(message);
    }
}

#endif
