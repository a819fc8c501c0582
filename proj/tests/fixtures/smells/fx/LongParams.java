package fx;

class LongParams {
    int mix(int a, int b, int c, int d, int e, int f) {
        return a + b + c + d + e + f;
    }

    int one() { return 1; }
    int two() { return 2; }
    int three() { return 3; }
}
