package fx;

import java.util.ArrayList;
import java.util.List;

/** Control: uses library types only. */
class Tidy {
    private final List<String> items = new ArrayList<>();

    void put(String s) { items.add(s); }
    int size() { return items.size(); }
    boolean has(String s) { return items.contains(s); }
    void drop() { items.clear(); }
}
