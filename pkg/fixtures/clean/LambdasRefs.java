class LambdasRefs
{
    Runnable r = () -> System.out.println("run");

    java.util.function.Function<Integer, Integer> doubler = x -> x * 2;

    java.util.function.BiFunction<Integer, Integer, Integer> add =
        (a, b) -> a + b;

    java.util.function.Supplier<String> ref = String::new;

    void varargs(String... parts)
    {
        java.util.Arrays.stream(parts).forEach(System.out::println);
    }
}
