"""Check the two built-in theorem words, a few identities between short words, and the relation suite."""
from conjrep.kernel import theorem_word, verify_kernel
from conjrep.lk_rep import evaluate_word, word_to_automorphism
from conjrep.free_group import aut_is_identity
from conjrep.words import parse_word, relation_instances


def same(lhs, rhs, n):
    x, y = parse_word(lhs, n), parse_word(rhs, n)
    return aut_is_identity(word_to_automorphism(x + y.inverse())), evaluate_word(x) == evaluate_word(y)


def main():
    for number in (3, 5):
        w = theorem_word(number)
        v = verify_kernel(w)
        print(f"Theorem {number}: {w}  (n={w.n})")
        print(f"  rho = I: {v.matrix_is_identity}   trivial in C_n: {v.automorphism_is_identity}   -> {v.conclusion}")

    print("\nidentities used in the proofs (equal in C_n, equal matrices):")
    for lhs, rhs, n in [("a1 a2 s1", "s2 a1 a2", 3), ("s1 a1 a2", "a2 a1 s2", 4), ("a1 a2 s1 a2 a1", "s2", 4),
                        ("s1 s2 a1 a2", "a1 a2 s1 s2", 3), ("s1 s2 a1", "a2 s1 s2", 4)]:
        group, rho = same(lhs, rhs, n)
        print(f"  n={n}  {lhs:>16} = {rhs:<14} group: {group!s:5}  rho: {rho}")

    print("\nrelation suite:")
    for corrected in (False, True):
        for n in range(2, 7):
            rels = relation_instances(n, corrected=corrected)
            bad = [r for r in rels if evaluate_word(r.lhs) != evaluate_word(r.rhs)
                   or word_to_automorphism(r.lhs) != word_to_automorphism(r.rhs)]
            tag = "corrected" if corrected else "printed  "
            print(f"  {tag} n={n}: {len(rels) - len(bad)}/{len(rels)} hold")


if __name__ == "__main__":
    main()
