#ifndef DI9_TRI_HPP
#define DI9_TRI_HPP

namespace di9 {

/// T and F are the truth values; O is the absence of a truth value
/// (a contingent-future gap), not a third truth value.
enum class Tri { T, F, O };

inline char tri_char(Tri v) { return v == Tri::T ? 'T' : (v == Tri::F ? 'F' : 'O'); }

inline Tri tri_of(bool b) { return b ? Tri::T : Tri::F; }

}  // namespace di9

#endif
