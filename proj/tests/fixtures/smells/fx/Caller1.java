package fx;

class Caller1 {
    void save(Popular p) { p.touch(); }
    void load(Popular p) { p.touch(); }
    int count() { return 1; }
    int limit() { return 1 * 10; }
}
