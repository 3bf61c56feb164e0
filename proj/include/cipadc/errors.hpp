// SPDX-License-Identifier: Apache-2.0
//
// cipadc: frequency-response simulator for channel-interleaved photonic ADCs
// Copyright (C) 2026 The cipadc authors
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

#ifndef CIPADC_ERRORS_HPP
#define CIPADC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cipadc
{
// Precondition violated by a caller (bad size, out-of-range index, ...).
class InvalidArgument : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Line selection removed every comb line.
class EmptyCombError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A frequency is not an integer multiple of the oracle's base resolution,
// or a DFT readout was requested off-bin.
class GridMismatchError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Scenario document is well-formed JSON but violates the schema or an invariant.
class ValidationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Scenario document is not parseable JSON.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace cipadc

#endif // CIPADC_ERRORS_HPP
