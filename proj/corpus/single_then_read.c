int x;

void main()
{
#pragma omp parallel
    {
        int got;
#pragma omp single
        { x = 42; }
        got = x;
    }
}
