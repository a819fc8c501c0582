package fx;

class Caller3 {
    void save(Popular p) { p.touch(); }
    void load(Popular p) { p.touch(); }
    int count() { return 3; }
    int limit() { return 3 * 10; }
}
