// Copyright 2026 The endoforge Authors
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

// Property checks behind `endoforge verify`. Each check names the hypothesis
// or guarantee it tests; a report passes iff no check failed. Checks whose
// enumeration ran out of budget are marked skipped and carry the reason.

#ifndef ENDOFORGE_VERIFY_HPP_
#define ENDOFORGE_VERIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "endoforge/algebra.hpp"
#include "endoforge/endo.hpp"
#include "endoforge/graph.hpp"
#include "endoforge/io.hpp"
#include "endoforge/pipeline.hpp"
#include "endoforge/retracts.hpp"

namespace endoforge {

struct Check {
  std::string name;
  bool ok = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::string subject;
  std::vector<Check> checks;

  bool ok() const;
  Check& add(std::string name, bool ok, std::string detail = {});
  Check& skip(std::string name, std::string why);
  // First failed check, for error messages.
  const Check* first_failure() const;
  std::string text() const;
};

io::Json to_json(const VerifyReport& r);

VerifyReport verify_encoding(const Lattice& l, const EndoOptions& options = {});
VerifyReport verify_gadget(std::size_t k, const EndoOptions& options = {});
VerifyReport verify_blowup(const ArcColoredDigraph& d,
                           const EndoOptions& options = {});
VerifyReport verify_sip(const ArcColoredDigraph& d,
                        std::optional<std::size_t> k = std::nullopt,
                        const EndoOptions& options = {});
// Final max degree must be 3; End compared at every enumerated stage.
VerifyReport verify_lattice_pipeline(const Lattice& l,
                                     const PipelineOptions& options = {});
// Final max degree must be at most max(k+1, 3) for right k-cancellative m.
VerifyReport verify_monoid_pipeline(const Monoid& m,
                                    const PipelineOptions& options = {});
VerifyReport verify_bp_monoid(std::size_t p);

struct MinorVerification {
  VerifyReport report;
  std::optional<RetractFamily> family;
  std::optional<MinorWitness> witness;
  SimpleGraph host;  // underlying graph of the encoding
};

// Retract lattice, private parts and (when J(L) allows it, or when
// allow_non_thick is set) the cover-graph minor witness on the encoding of l.
MinorVerification verify_minor(const Lattice& l, bool allow_non_thick = false,
                               const EndoOptions& options = {});

}  // namespace endoforge

#endif  // ENDOFORGE_VERIFY_HPP_
