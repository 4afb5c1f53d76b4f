#ifndef ARRTOP_ARTIFACTS_HPP
#define ARRTOP_ARTIFACTS_HPP

#include <cstdint>
#include <string>

#include "arrtop/arrangement.hpp"

namespace arrtop {

enum class RenderFormat { json, dot, text };

// Input side: {"dimension": l, "hyperplanes": [["p/q", ...], ...]}.
Arrangement arrangement_from_json(const std::string& text);

// Builtin names: "coords", "braid:L", "dihedral:M"; essentialize applies to
// braid only.
Arrangement builtin_arrangement(const std::string& name, bool essentialize);

std::string arrangement_json(const Arrangement& a);

std::string render_faces(const Arrangement& a, std::size_t cap, RenderFormat f);
std::string render_salvetti(const Arrangement& a, std::size_t cap, bool with_homology,
                            RenderFormat f);
std::string render_presentation(const Arrangement& a, std::size_t cap, RenderFormat f);
std::string render_group(const Arrangement& a, std::size_t cap);

struct CheckOutcome {
    bool all_pass = false;
    bool symmetry_pass = true;
    std::string out;
};
CheckOutcome render_checks(const Arrangement& a, std::size_t cap, std::uint64_t seed,
                           RenderFormat f);
// Axiom checks over a bare face list ({"covectors": [...]} or a faces
// artifact); no geometry involved.
CheckOutcome render_face_file_checks(const std::string& text, RenderFormat f);

} // namespace arrtop

#endif
