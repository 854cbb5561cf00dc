int x;

void main()
{
#pragma omp parallel
    {
        int got;
#pragma omp master
        { x = 7; }
#pragma omp barrier
        got = x;
    }
}
