/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing,
 * software distributed under the License is distributed on an
 * "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
 * KIND, either express or implied.  See the License for the
 * specific language governing permissions and limitations
 * under the License.
 */

#ifndef BURES_ERRORS_HPP
#define BURES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bures {

// Argument outside the mathematical domain of an operation (nonpositive
// polygamma argument, zero denominator in a finite sum, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The ensemble is degenerate for the requested quantity, e.g. m = 1 where
// the entropy is identically zero and has no variance.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bures

#endif  // BURES_ERRORS_HPP
