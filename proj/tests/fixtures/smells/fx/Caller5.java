package fx;

class Caller5 {
    void save(Popular p) { p.touch(); }
    void load(Popular p) { p.touch(); }
    int count() { return 5; }
    int limit() { return 5 * 10; }
}
