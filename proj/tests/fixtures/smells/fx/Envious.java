package fx;

class Envious {
    private int base;

    int score(Envied other) {
        return other.a * other.b + other.c * other.d + other.e * other.f;
    }

    int base() { return base; }
    void bump() { base++; }
    void drop() { base--; }
}
