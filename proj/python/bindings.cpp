// SPDX-License-Identifier: Apache-2.0
//
// Python bindings.  The heavy lifting stays in the C++ library; complex
// commands go through the same JSON runner the command-line tool uses
// (so Python and CLI reports are identical), while a few frequently used
// operations get direct list-based wrappers.

#include <cstdint>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "setlab/bitset.hpp"
#include "setlab/hitting.hpp"
#include "setlab/runner.hpp"
#include "setlab/symmetry.hpp"

namespace py = pybind11;

namespace {

using setlab::Mask;

using ElemList = std::vector<std::uint32_t>;
using SetList = std::vector<ElemList>;

Mask to_mask(const ElemList& elems, std::uint32_t m) {
  return setlab::mask_from_elements(elems, m);
}

std::vector<Mask> to_masks(const SetList& sets, std::uint32_t m) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const ElemList& s : sets) masks.push_back(to_mask(s, m));
  return masks;
}

SetList from_masks(const std::vector<Mask>& masks) {
  SetList sets;
  sets.reserve(masks.size());
  for (const Mask a : masks) sets.push_back(setlab::mask_elements(a));
  return sets;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() =
      "Finite set-system topologies, hitting-set combinatorics, and "
      "block-permutation symmetry (core bindings).";

  // Bad arguments (out-of-range elements, malformed configs, unknown
  // commands) surface as ValueError rather than a generic RuntimeError.
  py::register_exception<setlab::PreconditionError>(mod, "PreconditionError",
                                                    PyExc_ValueError);

  mod.def(
      "run_json",
      [](const std::string& config) {
        return setlab::run_command(setlab::Json::parse(config))
            .to_json()
            .dump();
      },
      py::arg("config"),
      "Run a verification command from a JSON config string; returns the "
      "structured report as a JSON string.");

  mod.def(
      "min_hitting",
      [](std::uint32_t m, const SetList& members, std::uint32_t k_cap) {
        const auto inst =
            setlab::HittingInstance::make(m, to_masks(members, m), k_cap);
        const auto r = setlab::canonical_min_hitting(inst);
        py::dict d;
        d["found"] = r.found;
        d["n0"] = r.n0;
        d["k0"] = r.k0;
        d["F"] = from_masks(r.F);
        d["f"] = setlab::mask_elements(r.f);
        return d;
      },
      py::arg("m"), py::arg("members"), py::arg("k_cap") = 0,
      "Canonical minimum hitting data for a family over {0,...,m-1}: "
      "least witness size n0, least miss count k0, all witnesses F of "
      "that size in canonical order, and their union f.");

  mod.def(
      "orbit",
      [](std::uint32_t atoms, const SetList& blocks, const ElemList& e,
         const ElemList& z) {
        const auto system =
            setlab::BlockSystem::make(atoms, to_masks(blocks, atoms));
        const auto support =
            setlab::Support::make(system, to_mask(e, atoms));
        return from_masks(
            setlab::orbit_of(to_mask(z, atoms), system, support));
      },
      py::arg("atoms"), py::arg("blocks"), py::arg("e"), py::arg("z"),
      "Orbit of z under the block-preserving permutations fixing e "
      "pointwise, in canonical order.");

  mod.def(
      "invariant_subsets",
      [](std::uint32_t atoms, const SetList& blocks, const ElemList& e) {
        const auto system =
            setlab::BlockSystem::make(atoms, to_masks(blocks, atoms));
        const auto support =
            setlab::Support::make(system, to_mask(e, atoms));
        return from_masks(setlab::fixed_subsets(system, support).enumerate());
      },
      py::arg("atoms"), py::arg("blocks"), py::arg("e"),
      "All subsets invariant under every block-preserving permutation "
      "fixing e pointwise, in canonical order.");
}
