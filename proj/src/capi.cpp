#include "arrtop.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "arrtop/artifacts.hpp"
#include "arrtop/error.hpp"

struct arrtop_arrangement {
    arrtop::Arrangement impl;
};

namespace {

thread_local std::string g_last_error;

arrtop_status status_of(arrtop::ErrorKind k) {
    switch (k) {
        case arrtop::ErrorKind::Parse: return ARRTOP_PARSE;
        case arrtop::ErrorKind::Invalid: return ARRTOP_INVALID;
        case arrtop::ErrorKind::Precondition: return ARRTOP_PRECONDITION;
        case arrtop::ErrorKind::Symmetry: return ARRTOP_SYMMETRY;
        case arrtop::ErrorKind::Internal: return ARRTOP_INTERNAL;
    }
    return ARRTOP_INTERNAL;
}

template <typename F>
arrtop_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return ARRTOP_OK;
    } catch (const arrtop::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return ARRTOP_INTERNAL;
    }
}

void copy_out(const std::string& s, char** out) {
    char* mem = static_cast<char*>(std::malloc(s.size() + 1));
    if (!mem) arrtop::fail(arrtop::ErrorKind::Internal, "out of memory");
    std::memcpy(mem, s.c_str(), s.size() + 1);
    *out = mem;
}

arrtop_status null_argument() {
    g_last_error = "null argument";
    return ARRTOP_INVALID;
}

arrtop::RenderFormat to_render_format(arrtop_format f) {
    switch (f) {
        case ARRTOP_FORMAT_DOT: return arrtop::RenderFormat::dot;
        case ARRTOP_FORMAT_TEXT: return arrtop::RenderFormat::text;
        default: return arrtop::RenderFormat::json;
    }
}

} // namespace

extern "C" {

const char* arrtop_last_error(void) { return g_last_error.c_str(); }

arrtop_status arrtop_arrangement_from_json(const char* text, arrtop_arrangement** out) {
    if (!text || !out) return null_argument();
    *out = nullptr;
    return guarded([&] { *out = new arrtop_arrangement{arrtop::arrangement_from_json(text)}; });
}

arrtop_status arrtop_arrangement_builtin(const char* name, int essentialize,
                                         arrtop_arrangement** out) {
    if (!name || !out) return null_argument();
    *out = nullptr;
    return guarded(
        [&] { *out = new arrtop_arrangement{arrtop::builtin_arrangement(name, essentialize != 0)}; });
}

void arrtop_arrangement_free(arrtop_arrangement* a) { delete a; }

size_t arrtop_arrangement_dimension(const arrtop_arrangement* a) {
    return a ? a->impl.dimension() : 0;
}

size_t arrtop_arrangement_size(const arrtop_arrangement* a) { return a ? a->impl.size() : 0; }

arrtop_status arrtop_arrangement_json(const arrtop_arrangement* a, char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] { copy_out(arrtop::arrangement_json(a->impl), out); });
}

arrtop_status arrtop_faces(const arrtop_arrangement* a, size_t cap, arrtop_format format,
                           char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] { copy_out(arrtop::render_faces(a->impl, cap, to_render_format(format)), out); });
}

arrtop_status arrtop_salvetti(const arrtop_arrangement* a, size_t cap, int with_homology,
                              arrtop_format format, char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] {
        copy_out(arrtop::render_salvetti(a->impl, cap, with_homology != 0, to_render_format(format)),
                 out);
    });
}

arrtop_status arrtop_presentation(const arrtop_arrangement* a, size_t cap, arrtop_format format,
                                  char** out) {
    if (!a || !out) return null_argument();
    return guarded(
        [&] { copy_out(arrtop::render_presentation(a->impl, cap, to_render_format(format)), out); });
}

arrtop_status arrtop_group(const arrtop_arrangement* a, size_t cap, char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] { copy_out(arrtop::render_group(a->impl, cap), out); });
}

arrtop_status arrtop_check(const arrtop_arrangement* a, size_t cap, uint64_t seed,
                           arrtop_format format, int* all_pass, int* symmetry_pass, char** out) {
    if (!a || !out) return null_argument();
    return guarded([&] {
        auto outcome = arrtop::render_checks(a->impl, cap, seed, to_render_format(format));
        if (all_pass) *all_pass = outcome.all_pass ? 1 : 0;
        if (symmetry_pass) *symmetry_pass = outcome.symmetry_pass ? 1 : 0;
        copy_out(outcome.out, out);
    });
}

arrtop_status arrtop_check_faces(const char* text, arrtop_format format, int* all_pass,
                                 char** out) {
    if (!text || !out) return null_argument();
    return guarded([&] {
        auto outcome = arrtop::render_face_file_checks(text, to_render_format(format));
        if (all_pass) *all_pass = outcome.all_pass ? 1 : 0;
        copy_out(outcome.out, out);
    });
}

void arrtop_string_free(char* s) { std::free(s); }

} // extern "C"
