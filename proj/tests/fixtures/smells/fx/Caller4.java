package fx;

class Caller4 {
    void save(Popular p) { p.touch(); }
    void load(Popular p) { p.touch(); }
    int count() { return 4; }
    int limit() { return 4 * 10; }
}
