package fx;

class Circle extends Shape {
    private double radius = 1;

    double area() { return Math.PI * radius * radius; }
    double perimeter() { return 2 * Math.PI * radius; }
    int tag(Leaf1 a, Leaf2 b) { return a.get() + b.get(); }
    String label() { return "circle"; }
}
